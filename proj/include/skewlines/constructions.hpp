#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skewlines/geometry.hpp"
#include "skewlines/symbol.hpp"
#include "skewlines/triple_table.hpp"

namespace skewlines {

/// Bijection of {1..k}, stored as its images.
class Permutation {
 public:
  /// Throws NotInjective unless images is a permutation of 1..k.
  explicit Permutation(std::vector<int> images);

  /// "1,2,5,6,3,4" or, for k <= 9, "125634".
  static Permutation parse(std::string_view text);
  static Permutation identity(int k);

  int size() const { return static_cast<int>(images_.size()); }
  /// sigma(i) for 1-based i.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// The images in reverse order (sigma o r with r(i) = k + 1 - i); jc of it is the mirror of jc(sigma).
  Permutation reversed() const;
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Join of two base lines: A_i = (i, 0, 0) on the x-axis, B_j = (0, j, 1) on the
/// line through (0,0,1) parallel to the y-axis; line i runs from A_i to B_sigma(i).
/// Throws SizeMismatch for k < 2.
Configuration jc(const Permutation& sigma);

/// p generatrices of x^2 + y^2 - z^2 = 1 through the circle points at parameters
/// t = 0..p-1, all of one ruling, oriented upward. Every triple has sign eps and
/// every pair has linking number eps.
Configuration ruled_family(int eps, int p);

/// Nested hyperboloid realization; lines appear in the symbol's leaf order.
/// Throws MissingSign or RealizationFailed.
Configuration build_symbol(const DecompSymbol& s);

/// Linking table of (2k-1)-subspaces in (4k-1)-space; k = 1 is lines in 3-space.
struct AbstractConfiguration {
  TripleTable table;
  int k = 1;
};

AbstractConfiguration suspension(const AbstractConfiguration& a);

/// Same canonical table. Throws SizeMismatch or TooLarge (n > 8).
bool stable_equivalent(const AbstractConfiguration& a, const AbstractConfiguration& b);

/// Throws SizeMismatch or TooLarge (k > 8).
bool joins_rigidly_isotopic(const Permutation& s1, const Permutation& s2);

/// Seeded rational nudge of every base and direction, at most scale per
/// coordinate. Accepted only when the straight path to it stays pairwise skew;
/// otherwise the scale is halved. Throws CannotPerturb after 20 halvings.
Configuration perturb(const Configuration& c, const Rational& scale, std::uint64_t seed = 1);

}  // namespace skewlines
