// Command-line front end for the skewlines library.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "skewlines/bracket.hpp"
#include "skewlines/classify.hpp"
#include "skewlines/constructions.hpp"
#include "skewlines/error.hpp"
#include "skewlines/invariants.hpp"
#include "skewlines/io.hpp"
#include "skewlines/symbol.hpp"

namespace sl = skewlines;

namespace {

struct Options {
  bool json_errors = false;
  int threads = 0;
  std::string calibration = "skewlines-calibration.json";
};

std::string label_list(const std::vector<int>& labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + std::to_string(labels[i]);
  return s;
}

int report(const sl::Error& e, const Options& opt) {
  if (opt.json_errors) {
    nlohmann::ordered_json j;
    j["error"] = std::string(sl::to_string(e.code()));
    j["message"] = e.message();
    j["labels"] = e.labels();
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "error: " << sl::to_string(e.code());
    if (!e.labels().empty()) std::cerr << "(" << label_list(e.labels()) << ")";
    std::cerr << ": " << e.message() << "\n";
  }
  return sl::is_validation_error(e.code()) ? 2 : 3;
}

void emit(const nlohmann::ordered_json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw sl::Error(sl::ErrorCode::ParseError, "cannot write " + out_path);
  out << j.dump(2) << "\n";
}

int label_arg(int label, const sl::Configuration& c) {
  if (label < 1 || label > c.size()) {
    throw sl::Error(sl::ErrorCode::ParseError, "label " + std::to_string(label) + " out of range 1.." +
                                                   std::to_string(c.size()), {label});
  }
  return label - 1;
}

std::optional<sl::BracketConvention> stored_convention(const Options& opt) {
  auto rec = sl::read_calibration(opt.calibration);
  if (!rec) return std::nullopt;
  return rec->convention;
}

sl::BracketConvention require_convention(const Options& opt) {
  auto conv = stored_convention(opt);
  if (!conv) {
    throw sl::Error(sl::ErrorCode::NoMatch, "no calibration record at " + opt.calibration +
                                                "; run `skewlines calibrate` first");
  }
  return *conv;
}

sl::CalibrationRecord run_calibration(const Options& opt) {
  const auto& g = sl::golden_tables();
  auto ref = sl::Permutation::parse(g.bracket_reference);
  sl::Calibration cal = sl::calibrate(sl::jc(ref), g.bracket_jc125634, opt.threads);
  sl::CalibrationRecord rec{cal.chosen, cal.matches, "jc(" + ref.str() + ")", g.bracket_jc125634};
  sl::write_calibration(opt.calibration, rec);
  return rec;
}

std::string symbol_or_nondecomposable(const std::optional<sl::DecompSymbol>& s) {
  return s ? s->str() : "nondecomposable";
}

// Regression over all printed reference data; returns the number of failures.
int run_golden(const Options& opt) {
  const auto& g = sl::golden_tables();
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "PASS " : "FAIL ") << what << "\n";
    if (!ok) ++failures;
  };
  auto table_of = [](const std::string& perm) {
    return sl::TripleTable::from_configuration(sl::jc(sl::Permutation::parse(perm)));
  };

  for (const auto& id : g.identities) {
    auto got = sl::decompose(table_of(id.permutation));
    auto want = sl::DecompSymbol::parse(id.symbol);
    check(got && *got == want, "jc(" + id.permutation + ") = " + want.str() + " (got " +
                                   symbol_or_nondecomposable(got) + ")");
  }
  for (const auto& p : g.nondecomposable) {
    check(!sl::decompose(table_of(p)), "jc(" + p + ") is nondecomposable");
  }
  for (const auto& m : g.mirror_pairs) {
    check(sl::canonical_table(table_of(m.first).negated()) == sl::canonical_table(table_of(m.second)),
          "jc(" + m.first + ") mirrors jc(" + m.second + ")");
  }
  for (const auto& e : g.join_clusters) {
    if (e.n > 6) continue;
    int got = static_cast<int>(sl::classify_joins(e.n).clusters.size());
    check(got == e.value, std::to_string(e.n) + "-line join clusters: " + std::to_string(got));
  }
  for (const auto& e : g.ordered_classes) {
    int got = sl::ordered_join_classes(e.n);
    check(got == e.value, std::to_string(e.n) + "-line ordered join classes: " + std::to_string(got));
  }
  {
    auto sums = sl::five_line_sums();
    std::set<int> distinct;
    int lo = 0, hi = 0;
    for (const auto& s : sums) {
      distinct.insert(s.triple_sum);
      lo = std::min(lo, s.triple_sum);
      hi = std::max(hi, s.triple_sum);
    }
    check(distinct.size() == sums.size() && lo == -10 && hi == 10, "five-line triple sums distinct, extremes -10/+10");
  }
  {
    auto rec = run_calibration(opt);
    auto ref = sl::jc(sl::Permutation::parse(g.bracket_reference));
    auto p = sl::drobotukhina(ref, rec.convention, opt.threads);
    check(p == g.bracket_jc125634, "bracket of jc(" + g.bracket_reference + ") = " + p.str());
    auto mirrored = sl::jc(sl::Permutation::parse(g.bracket_reference).reversed());
    auto q = sl::drobotukhina(mirrored, rec.convention, opt.threads);
    check(q == sl::mirror_poly(g.bracket_jc125634), "bracket of the mirror join = A <-> A^-1 image");
    check(sl::mirror_poly(g.bracket_m) == g.bracket_m_mirror, "printed M and M' are A <-> A^-1 images");
  }
  std::cout << (failures ? std::to_string(failures) + " failure(s)" : std::string("all golden checks passed"))
            << "\n";
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of configurations of skew lines in 3-space"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_errors, "Report errors as JSON on stderr");
  app.add_option("--threads", opt.threads, "Worker threads for state sums (0 = all cores)");
  app.add_option("--calibration", opt.calibration, "Calibration record file")->capture_default_str();

  std::string file, file2, out_path, text;
  int i = 0, j = 0, k = 0, n = 0;
  bool slow = false, no_bracket = false;
  std::vector<long long> dir;

  auto* validate = app.add_subcommand("validate", "Check a configuration or point-set file");
  validate->add_option("FILE", file)->required();

  auto* lk = app.add_subcommand("lk", "Linking number of two lines (1-based labels)");
  lk->add_option("FILE", file)->required();
  lk->add_option("I", i)->required();
  lk->add_option("J", j)->required();

  auto* lk3 = app.add_subcommand("lk3", "Linking number of three lines");
  lk3->add_option("FILE", file)->required();
  lk3->add_option("I", i)->required();
  lk3->add_option("J", j)->required();
  lk3->add_option("K", k)->required();

  auto* prof = app.add_subcommand("profile", "Invariant profile as JSON");
  prof->add_option("FILE", file)->required();
  prof->add_flag("--no-bracket", no_bracket, "Skip the bracket polynomial");

  auto* ident = app.add_subcommand("identify", "Match a configuration against the join classes");
  ident->add_option("FILE", file)->required();
  ident->add_flag("--no-bracket", no_bracket, "Skip the bracket polynomial");

  auto* jcmd = app.add_subcommand("jc", "Emit the join configuration of a permutation");
  jcmd->add_option("PERM", text, "e.g. 1,2,5,6,3,4")->required();
  jcmd->add_option("-o,--output", out_path);

  auto* build = app.add_subcommand("symbol-build", "Emit a realization of a decomposition symbol");
  build->add_option("SYMBOL", text, "e.g. \"<+<1>,<-2>,<-2>>\"")->required();
  build->add_option("-o,--output", out_path);

  auto* dec = app.add_subcommand("decompose", "Decomposition symbol of a configuration");
  dec->add_option("FILE", file)->required();

  auto* br = app.add_subcommand("bracket", "Bracket polynomial (needs a calibration record)");
  br->add_option("FILE", file)->required();
  br->add_option("--direction", dir, "Projection direction a b c")->expected(3);

  auto* cal = app.add_subcommand("calibrate", "Fix the bracket convention and store the record");

  auto* cj = app.add_subcommand("classify-joins", "Cluster the joins jc(sigma), sigma in S_N");
  cj->add_option("N", n)->required()->check(CLI::Range(2, 7));
  cj->add_flag("--slow", slow, "Allow N = 7");
  cj->add_flag("--no-bracket", no_bracket, "Skip per-cluster brackets");

  auto* oj = app.add_subcommand("ordered-joins", "Number of labeled join classes");
  oj->add_option("N", n)->required()->check(CLI::Range(2, 5));

  auto* pts = app.add_subcommand("points", "Invariants of a nonsingular point set");
  pts->add_option("FILE", file)->required();

  auto* pod = app.add_subcommand("podkorytov", "Existence of an amphicheiral set of Q points and P lines");
  pod->add_option("P", i)->required()->check(CLI::NonNegativeNumber);
  pod->add_option("Q", j)->required()->check(CLI::NonNegativeNumber);

  auto* se = app.add_subcommand("stable-equiv", "Stable equivalence of two configurations");
  se->add_option("FILE1", file)->required();
  se->add_option("FILE2", file2)->required();

  auto* gold = app.add_subcommand("golden", "Run all regressions against printed reference data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) {
      auto f = sl::read_config_file(file);
      if (f.lines) std::cout << "ok: " << f.lines->size() << " pairwise skew lines\n";
      if (f.points) std::cout << "ok: " << f.points->size() << " points in general position\n";
    } else if (*lk) {
      auto c = sl::read_configuration(file);
      std::printf("%+d\n", sl::lk_pair(c.line(label_arg(i, c)), c.line(label_arg(j, c))));
    } else if (*lk3) {
      auto c = sl::read_configuration(file);
      std::printf("%+d\n", sl::lk_triple(c.line(label_arg(i, c)), c.line(label_arg(j, c)), c.line(label_arg(k, c))));
    } else if (*prof) {
      auto c = sl::read_configuration(file);
      auto conv = no_bracket ? std::nullopt : stored_convention(opt);
      std::cout << sl::profile_report(sl::profile(c, conv, opt.threads)).dump(2) << "\n";
    } else if (*ident) {
      auto c = sl::read_configuration(file);
      auto conv = no_bracket ? std::nullopt : stored_convention(opt);
      auto id = sl::identify(c, conv, opt.threads);
      nlohmann::ordered_json r = sl::profile_report(id.profile);
      r["match"] = id.status == sl::Identification::Status::Join ? nlohmann::ordered_json("jc(" + id.table_match->str() + ")")
                                                                 : nlohmann::ordered_json("non-join or unknown");
      r["note"] = id.note;
      std::cout << r.dump(2) << "\n";
    } else if (*jcmd) {
      emit(sl::configuration_to_json(sl::jc(sl::Permutation::parse(text))), out_path);
    } else if (*build) {
      emit(sl::configuration_to_json(sl::build_symbol(sl::DecompSymbol::parse(text))), out_path);
    } else if (*dec) {
      auto c = sl::read_configuration(file);
      if (c.size() < 1) throw sl::Error(sl::ErrorCode::TooFewLines, "empty configuration");
      std::cout << symbol_or_nondecomposable(sl::decompose(sl::TripleTable::from_configuration(c))) << "\n";
    } else if (*br) {
      auto c = sl::read_configuration(file);
      auto conv = require_convention(opt);
      auto p = dir.empty() ? sl::drobotukhina(c, conv, opt.threads)
                           : sl::drobotukhina(c, sl::Vec3{sl::Rational(dir[0]), sl::Rational(dir[1]), sl::Rational(dir[2])},
                                              conv, opt.threads);
      std::cout << p.str() << "\n";
    } else if (*cal) {
      auto rec = run_calibration(opt);
      std::cout << "matches:\n";
      for (const auto& m : rec.matches) std::cout << "  " << m.str() << "\n";
      std::cout << "chosen: " << rec.convention.str() << "\nwritten to " << opt.calibration << "\n";
    } else if (*cj) {
      if (n == 7 && !slow) {
        std::cerr << "classify-joins 7 evaluates 48 brackets of 2^21 states; pass --slow to run it\n";
        return 1;
      }
      auto conv = no_bracket ? std::nullopt : stored_convention(opt);
      auto res = sl::classify_joins(n, conv, opt.threads);
      std::cout << res.clusters.size() << " clusters of joins of " << n << " lines\n";
      for (const auto& cl : res.clusters) {
        std::cout << "jc(" << cl.representative.str() << ")  members=" << cl.members.size()
                  << "  sum=" << cl.triple_sum << "  symbol=" << symbol_or_nondecomposable(cl.symbol);
        if (cl.bracket) std::cout << "  bracket=" << cl.bracket->str();
        std::cout << "\n";
      }
      if (res.brackets_distinct) {
        std::cout << "brackets pairwise distinct: " << (*res.brackets_distinct ? "yes" : "no") << "\n";
        if (!*res.brackets_distinct) return 3;
      }
    } else if (*oj) {
      std::cout << sl::ordered_join_classes(n) << "\n";
    } else if (*pts) {
      auto f = sl::read_config_file(file);
      if (!f.points) throw sl::Error(sl::ErrorCode::ParseError, file + ": no \"points\"");
      const auto& p = *f.points;
      auto s = sl::pointset_skew_triple_sum(p);
      std::cout << "skew triple sum: " << s.value << " over " << s.terms << " triples";
      std::cout << (s.terms % 2 ? " (odd count: sum is nonzero, set is not amphicheiral)\n" : "\n");
      if (p.size() >= 7) {
        auto cyc = sl::pointset_cyclic_invariant(p);
        std::cout << "cyclic invariant: " << cyc.value << " over " << cyc.terms << " triples";
        std::cout << (cyc.terms % 2 ? " (odd count: sum is nonzero, set is not amphicheiral)\n" : "\n");
      }
    } else if (*pod) {
      std::cout << (sl::podkorytov_exists(i, j) ? "yes" : "no") << "\n";
    } else if (*se) {
      auto a = sl::read_configuration(file);
      auto b = sl::read_configuration(file2);
      sl::AbstractConfiguration x{sl::TripleTable::from_configuration(a)}, y{sl::TripleTable::from_configuration(b)};
      std::cout << (sl::stable_equivalent(x, y) ? "yes" : "no") << "\n";
    } else if (*gold) {
      return run_golden(opt) == 0 ? 0 : 3;
    }
  } catch (const sl::Error& e) {
    return report(e, opt);
  }
  return 0;
}
