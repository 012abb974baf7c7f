#pragma once

#include <vector>

#include "skewlines/geometry.hpp"

namespace skewlines {

struct Crossing {
  int over = 0;
  int under = 0;
  /// Parameters t of the crossing point base + t * dir on each line.
  Rational over_param;
  Rational under_param;
  /// Sign of the 2D cross product (projected over direction, projected under direction).
  int writhe_sign = 0;
};

/// Generic projection of n skew lines onto the projective plane.
///
/// Every projected line is a closed circle meeting the others in n-1 crossings and
/// passing once through infinity, between its last and first crossing.
struct Diagram {
  int n = 0;
  Vec3 direction;
  std::vector<Crossing> crossings;
  /// order[i]: indices of the crossings on line i by increasing parameter.
  std::vector<std::vector<int>> order;
};

/// Viewer on the +dir side: the strand with the larger dir coordinate is over.
/// Throws NonGenericDirection naming the violated condition and lines.
Diagram project(const Configuration& c, const Vec3& dir);

/// First generic direction among small integer vectors, scanned by growing
/// max-norm, then lexicographically, first nonzero coordinate positive.
/// Throws Exhausted after 10^4 candidates.
Vec3 find_generic_direction(const Configuration& c);

/// The first `count` generic directions of the same scan.
std::vector<Vec3> generic_directions(const Configuration& c, int count);

}  // namespace skewlines
