#include "skewlines/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "skewlines/error.hpp"

namespace skewlines {

TripleTable triple_table(const Configuration& c) {
  if (c.size() < 3) throw Error(ErrorCode::TooFewLines, "need at least 3 lines");
  return TripleTable::from_configuration(c);
}

int triple_sum(const TripleTable& t) {
  int s = 0;
  for (auto e : t.signs()) s += e;
  return s;
}

std::string ChiralityVerdict::str() const {
  switch (reason) {
    case Reason::TripleCountParity:
      return "nonamphicheiral (odd number of triples)";
    case Reason::NonzeroTripleSum:
      return "nonamphicheiral (triple sum " + std::to_string(triple_sum) + ")";
    case Reason::None:
      break;
  }
  return "inconclusive";
}

ChiralityVerdict chirality_certificate(const TripleTable& t) {
  if (t.size() < 3) throw Error(ErrorCode::TooFewLines, "need at least 3 lines");
  ChiralityVerdict v;
  v.triple_sum = triple_sum(t);
  if (t.size() % 4 == 3) {
    v.kind = ChiralityVerdict::Kind::Nonamphicheiral;
    v.reason = ChiralityVerdict::Reason::TripleCountParity;
  } else if (v.triple_sum != 0) {
    v.kind = ChiralityVerdict::Kind::Nonamphicheiral;
    v.reason = ChiralityVerdict::Reason::NonzeroTripleSum;
  }
  return v;
}

ChiralityVerdict chirality_certificate(const Configuration& c) {
  return chirality_certificate(triple_table(c));
}

namespace {

bool linking_equivalent(const TripleTable& t, int a, int b) {
  const int n = t.size();
  for (int x = 0; x < n; ++x) {
    if (x == a || x == b) continue;
    for (int y = x + 1; y < n; ++y) {
      if (y == a || y == b) continue;
      if (t.at(a, x, y) != t.at(b, x, y)) return false;
    }
  }
  return true;
}

}  // namespace

Partition linking_equivalence_partition(const TripleTable& t) {
  if (t.size() < 3) throw Error(ErrorCode::TooFewLines, "need at least 3 lines");
  // The relation is transitive: a~b and b~c give lk(a,b,y) = lk(a,c,y) = lk(b,c,y).
  Partition classes;
  for (int a = 0; a < t.size(); ++a) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const std::vector<int>& cls) { return linking_equivalent(t, cls.front(), a); });
    if (it == classes.end()) {
      classes.push_back({a});
    } else {
      it->push_back(a);
    }
  }
  return classes;
}

int class_epsilon(const TripleTable& t, const std::vector<int>& cls) {
  if (cls.size() < 2) throw Error(ErrorCode::ClassTooSmall, "class needs at least 2 lines");
  if (static_cast<int>(cls.size()) >= t.size()) {
    throw Error(ErrorCode::NoExternalLine, "class contains every line");
  }
  std::vector<bool> inside(static_cast<std::size_t>(t.size()), false);
  for (int a : cls) inside[static_cast<std::size_t>(a)] = true;
  int eps = 0;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      for (int x = 0; x < t.size(); ++x) {
        if (inside[static_cast<std::size_t>(x)]) continue;
        int s = t.at(cls[i], cls[j], x);
        if (eps == 0) {
          eps = s;
        } else if (s != eps) {
          throw Error(ErrorCode::Inconsistent, "class sign is not constant");
        }
      }
    }
  }
  return eps;
}

TripleTable derived_table(const TripleTable& t) {
  auto classes = linking_equivalence_partition(t);
  std::vector<int> reps;
  for (const auto& c : classes) reps.push_back(c.front());
  return t.restricted(reps);
}

TripleTable canonical_table(const TripleTable& t) {
  const int n = t.size();
  if (n > 8) throw Error(ErrorCode::TooLarge, "canonical form limited to n <= 8");
  if (n < 3) return t;

  std::vector<std::array<int, 3>> triples;
  for_each_triple(n, [&](int i, int j, int k) { triples.push_back({i, j, k}); });
  // rank of any ordering of three distinct labels
  std::array<std::int8_t, 512> lookup{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i != j && j != k && i != k) lookup[static_cast<std::size_t>(i * 64 + j * 8 + k)] =
            static_cast<std::int8_t>(t.at(i, j, k));
      }
    }
  }

  const std::size_t m = triples.size();
  std::vector<std::int8_t> best(m, 2), cur(m);
  std::vector<int> best_q;
  std::vector<int> q(static_cast<std::size_t>(n));
  std::iota(q.begin(), q.end(), 0);
  do {
    bool less = false;
    bool abort = false;
    for (std::size_t r = 0; r < m; ++r) {
      const auto& tr = triples[r];
      auto e = lookup[static_cast<std::size_t>(q[static_cast<std::size_t>(tr[0])] * 64 +
                                               q[static_cast<std::size_t>(tr[1])] * 8 +
                                               q[static_cast<std::size_t>(tr[2])])];
      if (!less) {
        if (e > best[r]) {
          abort = true;
          break;
        }
        if (e < best[r]) less = true;
      }
      cur[r] = e;
    }
    if (!abort && less) {
      best = cur;
      best_q = q;
    }
  } while (std::next_permutation(q.begin(), q.end()));

  // entry(a,b,c) = t(q[a],q[b],q[c]): old line q[a] receives label a.
  std::vector<int> new_label(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) new_label[static_cast<std::size_t>(best_q[static_cast<std::size_t>(a)])] = a;
  return t.relabeled(new_label);
}

bool podkorytov_exists(int p, int q) {
  if (p < 0 || q < 0) return false;
  return (q <= 3 && (p % 4 == 0 || p % 4 == 1)) || ((q % 4 == 0 || q % 4 == 1) && p % 2 == 0);
}

}  // namespace skewlines
