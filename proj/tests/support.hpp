#pragma once

#include <random>
#include <vector>

#include "skewlines/error.hpp"
#include "skewlines/geometry.hpp"

namespace skewlines::testing {

inline Vec3 v(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

inline OrientedLine line(Vec3 base, Vec3 dir) { return {std::move(base), std::move(dir)}; }

// Integer coordinates in [-range, range]; redraws until pairwise skew.
inline Configuration random_configuration(std::mt19937_64& rng, int n, int range = 9) {
  std::uniform_int_distribution<long> coord(-range, range);
  for (;;) {
    std::vector<OrientedLine> lines;
    try {
      for (int i = 0; i < n; ++i) {
        Vec3 b = v(coord(rng), coord(rng), coord(rng));
        Vec3 d = v(coord(rng), coord(rng), coord(rng));
        lines.emplace_back(b, d);
      }
      return Configuration(std::move(lines));
    } catch (const Error&) {
    }
  }
}

inline PointSet random_pointset(std::mt19937_64& rng, int q, int range = 20) {
  std::uniform_int_distribution<long> coord(-range, range);
  for (;;) {
    std::vector<Vec3> pts;
    for (int i = 0; i < q; ++i) pts.push_back(v(coord(rng), coord(rng), coord(rng)));
    try {
      return PointSet(std::move(pts));
    } catch (const Error&) {
    }
  }
}

}  // namespace skewlines::testing
