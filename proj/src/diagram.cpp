#include "skewlines/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>

#include "skewlines/error.hpp"

namespace skewlines {

namespace {

struct Planar {
  Rational x, y, w;
};

struct ProjectedLine {
  Planar base;
  Planar dir;
};

class Frame {
 public:
  explicit Frame(const Vec3& dir) : d_(dir) {
    std::tie(e1_, e2_) = transverse_frame(dir);
    det_ = det(e1_, e2_, d_);
  }
  // Coordinates of v in the basis (e1, e2, d) by Cramer's rule.
  Planar coords(const Vec3& v) const {
    return {det(v, e2_, d_) / det_, det(e1_, v, d_) / det_, det(e1_, e2_, v) / det_};
  }

 private:
  Vec3 d_, e1_, e2_;
  Rational det_;
};

Rational cross2(const Planar& a, const Planar& b) { return a.x * b.y - a.y * b.x; }

[[noreturn]] void non_generic(const std::string& what, std::vector<int> labels) {
  throw Error(ErrorCode::NonGenericDirection, what, std::move(labels));
}

std::optional<Diagram> try_project(const Configuration& c, const Vec3& dir, bool throw_reason) {
  if (dir.is_zero()) {
    if (throw_reason) throw Error(ErrorCode::ZeroDirection, "projection direction is zero");
    return std::nullopt;
  }
  const int n = c.size();
  Frame frame(dir);
  std::vector<ProjectedLine> lines;
  for (int i = 0; i < n; ++i) {
    ProjectedLine pl{frame.coords(c.line(i).base()), frame.coords(c.line(i).dir())};
    if (pl.dir.x.is_zero() && pl.dir.y.is_zero()) {
      if (throw_reason) non_generic("direction is parallel to a line", {i + 1});
      return std::nullopt;
    }
    lines.push_back(std::move(pl));
  }

  Diagram d;
  d.n = n;
  d.direction = dir;
  d.order.assign(static_cast<std::size_t>(n), {});
  std::set<std::pair<Rational, Rational>> points;
  std::vector<std::vector<std::pair<Rational, int>>> along(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& a = lines[static_cast<std::size_t>(i)];
      const auto& b = lines[static_cast<std::size_t>(j)];
      Rational den = cross2(a.dir, b.dir);
      if (den.is_zero()) {
        if (throw_reason) non_generic("projected lines are parallel", {i + 1, j + 1});
        return std::nullopt;
      }
      Planar r{b.base.x - a.base.x, b.base.y - a.base.y, 0};
      Rational s = cross2(r, b.dir) / den;
      Rational t = cross2(r, a.dir) / den;
      auto pt = std::make_pair(a.base.x + s * a.dir.x, a.base.y + s * a.dir.y);
      if (!points.insert(pt).second) {
        if (throw_reason) non_generic("three projected lines meet in one point", {i + 1, j + 1});
        return std::nullopt;
      }
      Rational wi = a.base.w + s * a.dir.w;
      Rational wj = b.base.w + t * b.dir.w;
      if (wi == wj) throw Error(ErrorCode::NotSkew, "lines intersect", {i + 1, j + 1});
      Crossing cr;
      bool i_over = wi > wj;
      cr.over = i_over ? i : j;
      cr.under = i_over ? j : i;
      cr.over_param = i_over ? s : t;
      cr.under_param = i_over ? t : s;
      const auto& od = lines[static_cast<std::size_t>(cr.over)].dir;
      const auto& ud = lines[static_cast<std::size_t>(cr.under)].dir;
      cr.writhe_sign = cross2(od, ud).sign();
      int k = static_cast<int>(d.crossings.size());
      along[static_cast<std::size_t>(i)].emplace_back(s, k);
      along[static_cast<std::size_t>(j)].emplace_back(t, k);
      d.crossings.push_back(std::move(cr));
    }
  }
  for (int i = 0; i < n; ++i) {
    auto& v = along[static_cast<std::size_t>(i)];
    std::sort(v.begin(), v.end());
    for (const auto& [param, k] : v) d.order[static_cast<std::size_t>(i)].push_back(k);
  }
  return d;
}

constexpr int kScanBound = 10000;

template <class F>
void scan_directions(F&& visit) {
  int visited = 0;
  for (int m = 1;; ++m) {
    for (int a = -m; a <= m; ++a) {
      for (int b = -m; b <= m; ++b) {
        for (int c = -m; c <= m; ++c) {
          if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != m) continue;
          int first = a != 0 ? a : (b != 0 ? b : c);
          if (first < 0) continue;
          if (++visited > kScanBound) return;
          if (!visit(Vec3{a, b, c})) return;
        }
      }
    }
  }
}

}  // namespace

Diagram project(const Configuration& c, const Vec3& dir) { return *try_project(c, dir, true); }

std::vector<Vec3> generic_directions(const Configuration& c, int count) {
  std::vector<Vec3> out;
  if (count <= 0) return out;
  scan_directions([&](const Vec3& v) {
    if (try_project(c, v, false)) out.push_back(v);
    return static_cast<int>(out.size()) < count;
  });
  if (static_cast<int>(out.size()) < count) {
    throw Error(ErrorCode::Exhausted, "found only " + std::to_string(out.size()) + " generic directions in " +
                                          std::to_string(kScanBound) + " candidates");
  }
  return out;
}

Vec3 find_generic_direction(const Configuration& c) { return generic_directions(c, 1).front(); }

}  // namespace skewlines
