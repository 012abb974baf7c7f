#include "skewlines/classify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "skewlines/error.hpp"

namespace skewlines {

Profile profile(const Configuration& c, const std::optional<BracketConvention>& conv, int threads) {
  Profile p;
  p.n = c.size();
  p.table = TripleTable::from_configuration(c);
  if (p.n <= 8) p.canonical = canonical_table(p.table);
  p.triple_sum = triple_sum(p.table);
  if (p.n >= 1) p.decomposition = decompose_labeled(p.table);
  if (conv && p.n >= 1) p.bracket = drobotukhina(c, *conv, threads);
  p.chirality = chirality_certificate(p.table);
  return p;
}

const GoldenTables& golden_tables() {
  static const GoldenTables g = [] {
    GoldenTables t;
    t.identities = {
        {"1,2,3,6,5,4", "<<+3>,<-3>>"},
        {"1,2,4,6,5,3", "<<-<1>,<+2>>,<+<1>,<-2>>>"},
        {"1,2,3,4,5,6", "<-6>"},
        {"6,5,4,3,2,1", "<+6>"},
        {"1,2,3,4,6,5", "<<+2>,<-4>>"},
        {"5,6,4,3,2,1", "<<+4>,<-2>>"},
        {"1,2,3,5,6,4", "<+<-3>,<-2>,<1>>"},
        {"4,6,5,3,2,1", "<-<+3>,<+2>,<1>>"},
        {"1,2,4,3,6,5", "<-<+2>,<+2>,<-2>>"},
        {"5,6,3,4,2,1", "<+<+2>,<-2>,<-2>>"},
        {"1,2,5,6,3,4", "<+<-2>,<-2>,<-2>>"},
        {"4,3,6,5,2,1", "<-<+2>,<+2>,<+2>>"},
    };
    t.mirror_pairs = {
        {"1,2,3,4,5,6", "6,5,4,3,2,1"}, {"1,2,3,4,6,5", "5,6,4,3,2,1"}, {"1,2,3,5,6,4", "4,6,5,3,2,1"},
        {"1,2,4,3,6,5", "5,6,3,4,2,1"}, {"1,2,5,6,3,4", "4,3,6,5,2,1"}, {"1,2,4,6,3,5", "5,3,6,4,2,1"},
    };
    t.nondecomposable = {"1,3,5,2,6,4", "1,2,4,6,3,5", "5,3,6,4,2,1"};
    t.bracket_jc125634 = LaurentPoly::parse(
        "A^13 + A^11 + 4A^7 + 7A^5 + 3A^3 + 2A^-1 + 5A^-3 + 3A^-5 + 2A^-9 + 3A^-11 + A^-13");
    t.bracket_m = LaurentPoly::parse(
        "-A^15 + 6A^11 + 6A^9 - 5A^7 - 6A^5 + 10A^3 + 16A + A^-1 - 10A^-3 + 10A^-7 + 5A^-9");
    t.bracket_m_mirror = LaurentPoly::parse(
        "5A^9 + 10A^7 - 10A^3 + A + 16A^-1 + 10A^-3 - 6A^-5 - 5A^-7 + 6A^-9 + 6A^-11 - A^-15");
    t.bracket_l = LaurentPoly::parse(
        "A^17 - 5A^13 + 15A^9 + 10A^7 - 13A^5 - 12A^3 + 15A + 22A^-1 - A^-3 - 12A^-5 + A^-7 + 8A^-9 + 3A^-11");
    t.join_clusters = {{3, 2}, {4, 3}, {5, 7}, {6, 15}, {7, 48}};
    t.ordered_classes = {{3, 2}, {4, 8}, {5, 64}};
    return t;
  }();
  return g;
}

JoinClassification classify_joins(int n, const std::optional<BracketConvention>& conv, int threads) {
  if (n < 2) throw Error(ErrorCode::TooFewLines, "classify_joins needs n >= 2");
  if (n > 7) throw Error(ErrorCode::TooLarge, "classify_joins supports n <= 7");
  JoinClassification out;
  out.n = n;
  std::map<std::uint64_t, std::size_t> index;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    Permutation sigma(images);
    TripleTable t = TripleTable::from_configuration(jc(sigma));
    TripleTable canon = canonical_table(t);
    auto [it, inserted] = index.try_emplace(canon.key(), out.clusters.size());
    if (inserted) {
      JoinCluster cl{sigma, {}, canon, triple_sum(t), decompose(t), std::nullopt};
      out.clusters.push_back(std::move(cl));
    }
    out.clusters[it->second].members.push_back(std::move(sigma));
  } while (std::next_permutation(images.begin(), images.end()));

  if (conv) {
    for (auto& cl : out.clusters) cl.bracket = drobotukhina(jc(cl.representative), *conv, threads);
    bool distinct = true;
    for (std::size_t i = 0; i < out.clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < out.clusters.size(); ++j) {
        if (out.clusters[i].bracket == out.clusters[j].bracket) distinct = false;
      }
    }
    out.brackets_distinct = distinct;
  }
  return out;
}

namespace {

const JoinClassification& cached_joins(int n) {
  static std::mutex mu;
  static std::map<int, JoinClassification> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, classify_joins(n)).first;
  return it->second;
}

}  // namespace

Identification identify(const Configuration& c, const std::optional<BracketConvention>& conv, int threads) {
  if (c.size() > 7) throw Error(ErrorCode::TooLarge, "identify supports n <= 7");
  Identification id;
  id.profile = profile(c, conv, threads);
  if (c.size() < 2) {
    id.note = "fewer than two lines";
    return id;
  }
  const auto& joins = cached_joins(c.size());
  for (const auto& cl : joins.clusters) {
    if (cl.canonical != *id.profile.canonical) continue;
    id.table_match = cl.representative;
    if (!id.profile.bracket) {
      id.status = Identification::Status::Join;
      id.note = "matched by triple table; bracket not checked";
    } else if (drobotukhina(jc(cl.representative), *conv, threads) == *id.profile.bracket) {
      id.status = Identification::Status::Join;
      id.note = "matched by triple table and bracket";
    } else {
      id.note = "triple table matches jc(" + cl.representative.str() + ") but the bracket differs: non-join or unknown";
    }
    return id;
  }
  id.note = "no join has this triple table: non-join or unknown";
  return id;
}

int ordered_join_classes(int n) {
  if (n > 5) throw Error(ErrorCode::TooLarge, "ordered_join_classes supports n <= 5");
  if (n < 2) throw Error(ErrorCode::TooFewLines, "ordered_join_classes needs n >= 2");
  std::unordered_set<std::uint64_t> seen;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    TripleTable t = TripleTable::from_configuration(jc(Permutation(sigma)));
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 0);
    do {
      seen.insert(t.relabeled(tau).key());
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return static_cast<int>(seen.size());
}

std::vector<ClusterSum> five_line_sums() {
  std::vector<ClusterSum> out;
  for (const auto& cl : classify_joins(5).clusters) out.push_back({cl.representative, cl.symbol, cl.triple_sum});
  return out;
}

}  // namespace skewlines
