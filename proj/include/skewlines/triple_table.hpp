#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "skewlines/geometry.hpp"

namespace skewlines {

/// Number of k-subsets of an n-set.
std::int64_t binomial(int n, int k);

/// Rank of the 3-subset {i < j < k} in colexicographic order: C(k,3) + C(j,2) + i.
inline int triple_rank(int i, int j, int k) {
  return k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i;
}

/// Signs of all 3-subsets of {0..n-1}, stored in colex order.
///
/// Any table built from geometry satisfies the four-line product identity; tables
/// supplied from outside are checked against it on construction.
class TripleTable {
 public:
  /// All-(+1) table.
  explicit TripleTable(int n = 0);

  /// Signs in colex order of the 3-subsets. Throws InvalidTable on a wrong
  /// length, a non-sign entry, or a violated four-line identity.
  static TripleTable from_signs(int n, std::vector<std::int8_t> signs);

  static TripleTable from_configuration(const Configuration& c);

  int size() const { return n_; }
  int count() const { return static_cast<int>(signs_.size()); }
  /// Any order of distinct i, j, k (0-based).
  int at(int i, int j, int k) const;
  std::span<const std::int8_t> signs() const { return signs_; }

  /// First 4-subset violating lk(abc) lk(abd) lk(acd) lk(bcd) = 1, if any.
  std::optional<std::array<int, 4>> lemma_violation() const;

  TripleTable negated() const;
  /// Table whose line new_label[i] is old line i.
  TripleTable relabeled(std::span<const int> new_label) const;
  /// Induced table on the given labels, renumbered 0..m-1 in the given order.
  TripleTable restricted(std::span<const int> labels) const;

  /// Bit r set iff entry r is -1. Requires n <= 8 (56 entries).
  std::uint64_t key() const;

  friend bool operator==(const TripleTable&, const TripleTable&) = default;

 private:
  TripleTable(int n, std::vector<std::int8_t> signs) : n_(n), signs_(std::move(signs)) {}

  int n_ = 0;
  std::vector<std::int8_t> signs_;
};

/// Calls f(i, j, k) for every 3-subset i < j < k of {0..n-1} in colex order.
template <class F>
void for_each_triple(int n, F&& f) {
  for (int k = 2; k < n; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) f(i, j, k);
    }
  }
}

}  // namespace skewlines
