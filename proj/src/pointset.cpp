#include <algorithm>

#include "skewlines/error.hpp"
#include "skewlines/invariants.hpp"

namespace skewlines {

namespace {

OrientedLine through(const PointSet& p, int a, int b) { return {p.point(a), p.point(b) - p.point(a)}; }

}  // namespace

PointSetSum pointset_skew_triple_sum(const PointSet& p) {
  const int q = p.size();
  if (q < 6) throw Error(ErrorCode::TooFewPoints, "need at least 6 points");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) pairs.emplace_back(i, j);
  }
  auto disjoint = [](const std::pair<int, int>& u, const std::pair<int, int>& v) {
    return u.first != v.first && u.first != v.second && u.second != v.first && u.second != v.second;
  };
  PointSetSum out;
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    OrientedLine lx = through(p, pairs[x].first, pairs[x].second);
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      if (!disjoint(pairs[x], pairs[y])) continue;
      OrientedLine ly = through(p, pairs[y].first, pairs[y].second);
      int lxy = lk_pair(lx, ly);
      for (std::size_t z = y + 1; z < pairs.size(); ++z) {
        if (!disjoint(pairs[x], pairs[z]) || !disjoint(pairs[y], pairs[z])) continue;
        OrientedLine lz = through(p, pairs[z].first, pairs[z].second);
        out.value += lxy * lk_pair(lx, lz) * lk_pair(ly, lz);
        ++out.terms;
      }
    }
  }
  return out;
}

std::vector<int> pencil_order(const PointSet& p, int a, int b) {
  Vec3 axis = p.point(b) - p.point(a);
  Vec3 helper{1, 0, 0};
  if (cross(axis, helper).is_zero()) helper = Vec3{0, 1, 0};
  Vec3 e1 = cross(axis, helper);
  Vec3 e2 = cross(axis, e1);

  struct Entry {
    int label;
    Rational x, y;
  };
  std::vector<Entry> entries;
  for (int i = 0; i < p.size(); ++i) {
    if (i == a || i == b) continue;
    Vec3 w = p.point(i) - p.point(a);
    Rational x = dot(w, e1);
    Rational y = dot(w, e2);
    // A plane through the axis meets both half-planes: fold angles into [0, pi).
    if (y.sign() < 0 || (y.is_zero() && x.sign() < 0)) {
      x = -x;
      y = -y;
    }
    entries.push_back({i, std::move(x), std::move(y)});
  }
  // No ties: two points on one plane through the axis would be four coplanar points.
  std::sort(entries.begin(), entries.end(), [](const Entry& u, const Entry& v) {
    return (u.x * v.y - u.y * v.x).sign() > 0;
  });
  std::vector<int> order;
  for (const auto& e : entries) order.push_back(e.label);
  return order;
}

PointSetSum pointset_cyclic_invariant(const PointSet& p) {
  const int q = p.size();
  if (q < 7) throw Error(ErrorCode::TooFewPoints, "need at least 7 points");
  PointSetSum out;
  for (int a = 0; a < q; ++a) {
    for (int b = a + 1; b < q; ++b) {
      OrientedLine axis = through(p, a, b);
      auto order = pencil_order(p, a, b);
      const auto m = order.size();
      for (std::size_t s = 0; s < m; ++s) {
        OrientedLine first = through(p, order[s], order[(s + 1) % m]);
        OrientedLine second = through(p, order[(s + 2) % m], order[(s + 3) % m]);
        out.value += lk_triple(axis, first, second);
        ++out.terms;
      }
    }
  }
  return out;
}

}  // namespace skewlines
