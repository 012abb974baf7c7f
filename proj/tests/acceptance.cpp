// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "skewlines/bracket.hpp"
#include "skewlines/classify.hpp"
#include "skewlines/constructions.hpp"
#include "skewlines/diagram.hpp"
#include "skewlines/invariants.hpp"
#include "support.hpp"

using namespace skewlines;
using skewlines::testing::line;
using skewlines::testing::random_configuration;
using skewlines::testing::v;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void lemma_suite(Outcome& out) {
  std::mt19937_64 rng(1001);
  auto t0 = Clock::now();
  long subsets = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 4 + trial % 5;
    auto c = random_configuration(rng, n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int d = b + 1; d < n; ++d)
          for (int e = d + 1; e < n; ++e) {
            const auto& L = c.lines();
            int prod = lk_triple(L[a], L[b], L[d]) * lk_triple(L[a], L[b], L[e]) * lk_triple(L[a], L[d], L[e]) *
                       lk_triple(L[b], L[d], L[e]);
            ++subsets;
            if (prod != 1) out.require(false, "lk product -1 on trial " + std::to_string(trial));
          }
  }
  double dt = seconds_since(t0);
  out.require(dt < 10, "runtime " + std::to_string(dt) + " s");
  out.detail << "500 configurations, " << subsets << " four-line subsets, " << dt << " s";
}

void join_counts(Outcome& out) {
  const int expected[] = {0, 0, 0, 2, 3, 7, 15, 48};
  auto t0 = Clock::now();
  for (int n = 4; n <= 6; ++n) {
    int got = static_cast<int>(classify_joins(n).clusters.size());
    out.require(got == expected[n], "n=" + std::to_string(n) + " gave " + std::to_string(got));
    out.detail << "n=" << n << ":" << got << " ";
  }
  double small = seconds_since(t0);
  out.require(small < 30, "n<=6 took " + std::to_string(small) + " s");

  t0 = Clock::now();
  auto seven = classify_joins(7, frozen_convention());
  double big = seconds_since(t0);
  int got = static_cast<int>(seven.clusters.size());
  out.require(got == 48, "n=7 gave " + std::to_string(got));
  bool all_brackets = true;
  for (const auto& c : seven.clusters) all_brackets = all_brackets && c.bracket.has_value();
  out.require(all_brackets, "missing n=7 cluster bracket");
  out.require(big < 600, "n=7 took " + std::to_string(big) + " s");
  out.detail << "n=7:" << got << " (" << small << " s, " << big << " s; brackets "
             << (seven.brackets_distinct.value_or(false) ? "pairwise distinct" : "not all distinct") << ")";
}

void symbol_identities(Outcome& out) {
  auto check = [&](const std::string& perm, const std::string& symbol) {
    auto got = decompose(triple_table(jc(Permutation::parse(perm))));
    auto want = DecompSymbol::parse(symbol);
    if (!got || !(*got == want))
      out.require(false, "jc(" + perm + ") -> " + (got ? got->str() : std::string("nondecomposable")));
  };
  const auto& ids = golden_tables().identities;
  for (const auto& id : ids) check(id.permutation, id.symbol);
  check("1,2,3,6,5,4", "<<+3>,<-3>>");
  check("1,2,4,6,5,3", "<<-<1>,<+2>>,<+<1>,<-2>>>");
  out.detail << ids.size() << " printed identities plus 2";
}

void bracket_golden(Outcome& out) {
  auto t0 = Clock::now();
  const auto& g = golden_tables();
  auto sigma = Permutation::parse(g.bracket_reference);
  auto cal = calibrate(jc(sigma), g.bracket_jc125634);
  out.require(!cal.matches.empty(), "no calibration match");
  out.require(drobotukhina(jc(sigma), cal.chosen) == g.bracket_jc125634, "reference value");
  out.require(drobotukhina(jc(sigma.reversed()), cal.chosen) == mirror_poly(g.bracket_jc125634), "mirror value");
  double dt = seconds_since(t0);
  out.require(dt < 5, "runtime " + std::to_string(dt) + " s");
  out.detail << cal.matches.size() << " grid matches, chosen " << cal.chosen.str() << ", " << dt << " s";
}

void mirror_duality(Outcome& out) {
  std::mt19937_64 rng(2002);
  for (int trial = 0; trial < 50; ++trial) {
    auto c = random_configuration(rng, 1 + trial % 5);
    auto m = mirror(c);
    out.require(drobotukhina(m) == mirror_poly(drobotukhina(c)), "bracket on trial " + std::to_string(trial));
    if (c.size() >= 3)
      out.require(triple_table(m) == triple_table(c).negated(), "table on trial " + std::to_string(trial));
  }
  out.detail << "50 configurations, n <= 5";
}

void projection_invariance(Outcome& out) {
  std::mt19937_64 rng(3003);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = random_configuration(rng, 3 + trial % 3);
    auto dirs = generic_directions(c, 10);
    auto p = drobotukhina(c, dirs[0]);
    for (const auto& d : dirs)
      out.require(drobotukhina(c, d) == p, "direction change on trial " + std::to_string(trial));
    auto q = perturb(c, Rational(1, 1000), static_cast<std::uint64_t>(trial));
    out.require(drobotukhina(q) == p, "perturbation on trial " + std::to_string(trial));
  }
  out.detail << "20 configurations x 10 directions + perturbation";
}

void five_line_sums_check(Outcome& out) {
  std::set<int> values;
  auto sums = five_line_sums();
  for (const auto& s : sums) values.insert(s.triple_sum);
  out.require(sums.size() == 7, "cluster count " + std::to_string(sums.size()));
  out.require(values.size() == sums.size(), "repeated sums");
  out.require(!values.empty() && *values.begin() == -10 && *values.rbegin() == 10, "extremes");
  out.detail << "sums";
  for (int s : values) out.detail << " " << s;
}

void chirality(Outcome& out) {
  std::mt19937_64 rng(4004);
  int tested = 0;
  for (int n : {3, 7}) {
    for (int trial = 0; trial < 20; ++trial, ++tested)
      out.require(chirality_certificate(random_configuration(rng, n)).nonamphicheiral(), "random n=" + std::to_string(n));
    for (int eps : {1, -1}) {
      ++tested;
      out.require(chirality_certificate(ruled_family(eps, n)).nonamphicheiral(), "ruled n=" + std::to_string(n));
    }
  }
  out.require(chirality_certificate(jc(Permutation::parse("1,3,5,7,2,4,6"))).nonamphicheiral(), "jc n=7");
  auto amph = chirality_certificate(build_symbol(DecompSymbol::parse("<<+2>,<-2>>")));
  out.require(amph.kind == ChiralityVerdict::Kind::Inconclusive, "<<+2>,<-2>> not inconclusive");

  auto p6 = pointset_skew_triple_sum(skewlines::testing::random_pointset(rng, 6));
  auto p7 = pointset_cyclic_invariant(skewlines::testing::random_pointset(rng, 7));
  out.require(p6.terms == 15 && p6.value % 2 != 0, "q=6 terms/value");
  out.require(p7.terms == 105 && p7.value % 2 != 0, "q=7 terms/value");
  out.detail << tested + 1 << " configurations; point terms " << p6.terms << ", " << p7.terms;
}

void podkorytov(Outcome& out) {
  auto formula = [](int p, int q) {
    return (q <= 3 && (p % 4 == 0 || p % 4 == 1)) || ((q % 4 == 0 || q % 4 == 1) && p % 2 == 0);
  };
  for (int p = 0; p <= 12; ++p)
    for (int q = 0; q <= 12; ++q)
      if (podkorytov_exists(p, q) != formula(p, q))
        out.require(false, "(" + std::to_string(p) + "," + std::to_string(q) + ")");
  out.require(!podkorytov_exists(3, 0) && podkorytov_exists(4, 0) && !podkorytov_exists(0, 6) &&
                  podkorytov_exists(2, 1),
              "spot rows");
  out.detail << "169 entries";
}

void stable_equivalence(Outcome& out) {
  std::mt19937_64 rng(5005);
  auto t = triple_table(jc(Permutation::parse("1,2,5,6,3,4")));
  AbstractConfiguration a{t};
  out.require(suspension(a).table == t && suspension(suspension(a)).k == 3, "suspension");
  AbstractConfiguration plus{symbol_to_table(DecompSymbol::parse("<+6>"))};
  AbstractConfiguration minus{symbol_to_table(DecompSymbol::parse("<-6>"))};
  out.require(!stable_equivalent(plus, minus), "<+6> ~ <-6>");

  std::uniform_int_distribution<int> kdist(1, 4);
  auto random_abstract = [&] {
    // Half the draws come from a small pool so equal classes actually occur.
    static const std::vector<std::string> pool{"12345", "54321", "13524", "12354", "21345"};
    if (rng() % 2)
      return AbstractConfiguration{triple_table(random_configuration(rng, 5)), kdist(rng)};
    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto base = triple_table(jc(Permutation::parse(pool[rng() % pool.size()])));
    return AbstractConfiguration{base.relabeled(perm), kdist(rng)};
  };
  int equivalent = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_abstract(), y = random_abstract(), z = random_abstract();
    bool xy = stable_equivalent(x, y), yx = stable_equivalent(y, x);
    bool yz = stable_equivalent(y, z), xz = stable_equivalent(x, z);
    equivalent += xy;
    out.require(stable_equivalent(x, x), "reflexivity");
    out.require(xy == yx, "symmetry");
    out.require(!(xy && yz) || xz, "transitivity");
    out.require(stable_equivalent(x, suspension(x)), "suspension invariance");
  }
  out.detail << "100 random pairs, " << equivalent << " equivalent";
}

void ordered_classes(Outcome& out) {
  int four = ordered_join_classes(4);
  int five = ordered_join_classes(5);
  out.require(four == 8, "n=4 gave " + std::to_string(four));
  out.require(five == 64, "n=5 gave " + std::to_string(five) + " (labeled tables do not separate the classes)");
  out.detail << "n=4:" << four << " n=5:" << five;
}

void geometry(Outcome& out) {
  auto a = line(v(0, 0, 0), v(1, 0, 0));
  auto b = line(v(0, 0, 1), v(0, 1, 0));
  auto c = line(v(1, 1, 0), v(0, 0, 1));
  auto p = parallelepiped_of_triple(a, b, c);
  int found = 0;
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 2; ++y)
      for (long z = 0; z < 2; ++z) found += std::find(p.vertices.begin(), p.vertices.end(), v(x, y, z)) != p.vertices.end();
  out.require(found == 8 && p.vertices.size() == 8, "cube vertices");

  int contained = 0;
  for (int eps : {1, -1}) {
    auto r = ruled_family(eps, 7);
    auto q = quadric_through(r.line(0), r.line(3), r.line(5));
    for (const auto& l : r.lines()) contained += line_quadric_position(q, l) == LinePosition::Contained;
  }
  out.require(contained == 14, "ruled lines not all contained");
  out.detail << "8 vertices, " << contained << "/14 generatrices contained";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"lemma suite", lemma_suite},
      {"join classification counts", join_counts},
      {"symbol identities", symbol_identities},
      {"bracket golden value", bracket_golden},
      {"mirror duality", mirror_duality},
      {"projection invariance", projection_invariance},
      {"five-line sums", five_line_sums_check},
      {"chirality obstructions", chirality},
      {"podkorytov predicate", podkorytov},
      {"stable equivalence", stable_equivalence},
      {"ordered classes", ordered_classes},
      {"geometry oracles", geometry},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome out;
    try {
      run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    failed += !out.ok;
    std::printf("%s %2d %s: %s\n", out.ok ? "PASS" : "FAIL", index, name, out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
