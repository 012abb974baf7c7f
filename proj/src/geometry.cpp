#include "skewlines/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "skewlines/error.hpp"

namespace skewlines {

Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational det(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

std::string to_string(const Vec3& v) {
  return "(" + v.x.str() + ", " + v.y.str() + ", " + v.z.str() + ")";
}

std::pair<Vec3, Vec3> transverse_frame(const Vec3& d) {
  for (const Vec3& a : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
    if (!cross(a, d).is_zero()) return {a, cross(d, a)};
  }
  throw Error(ErrorCode::ZeroDirection, "zero direction has no transverse frame");
}

OrientedLine::OrientedLine(Vec3 base, Vec3 dir) : base_(std::move(base)), dir_(std::move(dir)) {
  if (dir_.is_zero()) throw Error(ErrorCode::ZeroDirection, "line direction is the zero vector");
}

namespace {

Rational skew_determinant(const OrientedLine& a, const OrientedLine& b) {
  return det(a.dir(), b.dir(), b.base() - a.base());
}

}  // namespace

bool skew(const OrientedLine& a, const OrientedLine& b) {
  // A nonzero determinant already excludes parallel directions.
  return !cross(a.dir(), b.dir()).is_zero() && !skew_determinant(a, b).is_zero();
}

int lk_pair(const OrientedLine& a, const OrientedLine& b) {
  int s = skew_determinant(a, b).sign();
  if (s == 0) throw Error(ErrorCode::NotSkew, "lines are parallel or intersecting");
  return s;
}

std::pair<OrientedLine, OrientedLine> canonical_semiorientation(const OrientedLine& a,
                                                                const OrientedLine& b) {
  if (!skew(a, b)) throw Error(ErrorCode::NotSkew, "lines are parallel or intersecting");
  int s = dot(a.dir(), b.dir()).sign();
  if (s == 0) throw Error(ErrorCode::Perpendicular, "canonical semi-orientation undefined");
  return {a, s > 0 ? b : b.reversed()};
}

int lk_triple(const OrientedLine& a, const OrientedLine& b, const OrientedLine& c) {
  return lk_pair(a, b) * lk_pair(a, c) * lk_pair(b, c);
}

OrientedLine mirror(const OrientedLine& l) {
  return {Vec3{l.base().x, l.base().y, -l.base().z}, Vec3{l.dir().x, l.dir().y, -l.dir().z}};
}

Vec3 AffineMap::apply_vector(const Vec3& v) const {
  return {dot(linear[0], v), dot(linear[1], v), dot(linear[2], v)};
}

Vec3 AffineMap::apply_point(const Vec3& p) const { return apply_vector(p) + shift; }

OrientedLine AffineMap::apply(const OrientedLine& l) const {
  return {apply_point(l.base()), apply_vector(l.dir())};
}

Configuration::Configuration(std::vector<OrientedLine> lines) : lines_(std::move(lines)) {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    for (std::size_t j = i + 1; j < lines_.size(); ++j) {
      if (!skew(lines_[i], lines_[j])) {
        int li = static_cast<int>(i) + 1;
        int lj = static_cast<int>(j) + 1;
        throw Error(ErrorCode::NotSkew,
                    "lines " + std::to_string(li) + " and " + std::to_string(lj) +
                        " are parallel or intersecting",
                    {li, lj});
      }
    }
  }
}

Configuration mirror(const Configuration& c) {
  std::vector<OrientedLine> out;
  out.reserve(c.lines().size());
  for (const auto& l : c.lines()) out.push_back(mirror(l));
  return Configuration(std::move(out));
}

Configuration transform(const Configuration& c, const AffineMap& map) {
  if (map.determinant().is_zero()) throw Error(ErrorCode::DegenerateSystem, "singular affine map");
  std::vector<OrientedLine> out;
  out.reserve(c.lines().size());
  for (const auto& l : c.lines()) out.push_back(map.apply(l));
  return Configuration(std::move(out));
}

Configuration relabel(const Configuration& c, std::span<const int> new_label) {
  if (static_cast<int>(new_label.size()) != c.size()) {
    throw Error(ErrorCode::SizeMismatch, "relabeling has wrong length");
  }
  std::vector<OrientedLine> out(c.lines().begin(), c.lines().end());
  for (int i = 0; i < c.size(); ++i) out[static_cast<std::size_t>(new_label[static_cast<std::size_t>(i)])] = c.line(i);
  return Configuration(std::move(out));
}

Parallelepiped parallelepiped_of_triple(const OrientedLine& a, const OrientedLine& b,
                                        const OrientedLine& c) {
  if (!skew(a, b) || !skew(a, c) || !skew(b, c)) {
    throw Error(ErrorCode::NotSkew, "triple is not pairwise skew");
  }
  const Vec3& da = a.dir();
  const Vec3& db = b.dir();
  const Vec3& dc = c.dir();
  Rational d = det(da, db, dc);
  if (d.is_zero()) throw Error(ErrorCode::ParallelPlanes, "lines lie in three parallel planes");

  // Affine coordinates (u, v, w) with p = u*da + v*db + w*dc (Cramer's rule).
  auto u_of = [&](const Vec3& p) { return det(p, db, dc) / d; };
  auto v_of = [&](const Vec3& p) { return det(da, p, dc) / d; };
  auto w_of = [&](const Vec3& p) { return det(da, db, p) / d; };

  // a runs along u at fixed (v_a, w_a); b along v at (u_b, w_b); c along w at (u_c, v_c).
  std::array<Rational, 2> us{u_of(b.base()), u_of(c.base())};
  std::array<Rational, 2> vs{v_of(a.base()), v_of(c.base())};
  std::array<Rational, 2> ws{w_of(a.base()), w_of(b.base())};

  Parallelepiped out;
  for (int bits = 0; bits < 8; ++bits) {
    out.vertices[static_cast<std::size_t>(bits)] =
        da * us[bits & 1] + db * vs[(bits >> 1) & 1] + dc * ws[(bits >> 2) & 1];
  }
  return out;
}

namespace {

Quadric::Matrix normalize(Quadric::Matrix m) {
  mpz_class den_lcm = 1;
  for (const auto& row : m) {
    for (const auto& e : row) {
      mpz_class den = e.denominator();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
  }
  mpz_class content = 0;
  int lead_sign = 0;
  for (auto& row : m) {
    for (auto& e : row) {
      e *= Rational(mpq_class(den_lcm));
      mpz_class num = e.numerator();
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
      if (lead_sign == 0) lead_sign = e.sign();
    }
  }
  if (content == 0) return m;
  Rational scale(mpq_class(mpz_class(lead_sign), content));
  for (auto& row : m) {
    for (auto& e : row) e *= scale;
  }
  return m;
}

}  // namespace

Quadric::Quadric(Matrix m) {
  bool any = false;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (m[i][j] != m[j][i]) throw Error(ErrorCode::DegenerateSystem, "quadric matrix not symmetric");
      any = any || !m[i][j].is_zero();
    }
  }
  if (!any) throw Error(ErrorCode::DegenerateSystem, "zero quadric");
  m_ = normalize(std::move(m));
}

Rational Quadric::evaluate(const Vec3& p) const {
  std::array<Rational, 4> h{p.x, p.y, p.z, Rational(1)};
  Rational sum;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) sum += h[i] * m_[i][j] * h[j];
  }
  return sum;
}

Quadric standard_hyperboloid() {
  Quadric::Matrix m{};
  m[0][0] = 1;
  m[1][1] = 1;
  m[2][2] = -1;
  m[3][3] = -1;
  return Quadric(m);
}

namespace {

// Monomial row [x^2, y^2, z^2, xy, xz, yz, x, y, z, 1].
std::array<Rational, 10> monomials(const Vec3& p) {
  return {p.x * p.x, p.y * p.y, p.z * p.z, p.x * p.y, p.x * p.z,
          p.y * p.z, p.x,       p.y,       p.z,       Rational(1)};
}

}  // namespace

Quadric quadric_through(const OrientedLine& a, const OrientedLine& b, const OrientedLine& c) {
  if (!skew(a, b) || !skew(a, c) || !skew(b, c)) {
    throw Error(ErrorCode::NotSkew, "triple is not pairwise skew");
  }
  if (det(a.dir(), b.dir(), c.dir()).is_zero()) {
    throw Error(ErrorCode::ParallelPlanes, "lines lie in three parallel planes");
  }
  std::vector<std::array<Rational, 10>> rows;
  for (const OrientedLine* l : {&a, &b, &c}) {
    for (int t : {-1, 0, 1}) rows.push_back(monomials(l->point_at(t)));
  }

  // Reduced row echelon form over Q.
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int col = 0; col < 10 && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = Rational(1) / rows[r][col];
    for (auto& e : rows[r]) e *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col];
      for (int k = 0; k < 10; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (10 - pivot_col.size() != 1) {
    throw Error(ErrorCode::DegenerateSystem,
                "solution space has dimension " + std::to_string(10 - pivot_col.size()));
  }
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;

  std::array<Rational, 10> q{};
  q[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) q[pivot_col[i]] = -rows[i][free_col];

  Rational half(1, 2);
  Quadric::Matrix m{};
  m[0][0] = q[0];
  m[1][1] = q[1];
  m[2][2] = q[2];
  m[3][3] = q[9];
  m[0][1] = m[1][0] = q[3] * half;
  m[0][2] = m[2][0] = q[4] * half;
  m[1][2] = m[2][1] = q[5] * half;
  m[0][3] = m[3][0] = q[6] * half;
  m[1][3] = m[3][1] = q[7] * half;
  m[2][3] = m[3][2] = q[8] * half;
  return Quadric(m);
}

std::string to_string(LinePosition p) {
  switch (p) {
    case LinePosition::Disjoint: return "Disjoint";
    case LinePosition::Tangent: return "Tangent";
    case LinePosition::TwoPoints: return "TwoPoints";
    case LinePosition::Contained: return "Contained";
  }
  return "?";
}

LinePosition line_quadric_position(const Quadric& q, const OrientedLine& l) {
  const auto& m = q.matrix();
  std::array<Rational, 4> base{l.base().x, l.base().y, l.base().z, Rational(1)};
  std::array<Rational, 4> dir{l.dir().x, l.dir().y, l.dir().z, Rational(0)};
  auto form = [&](const std::array<Rational, 4>& u, const std::array<Rational, 4>& v) {
    Rational s;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) s += u[i] * m[i][j] * v[j];
    }
    return s;
  };
  // f(t) = a t^2 + 2 h t + c
  Rational a = form(dir, dir);
  Rational h = form(dir, base);
  Rational c = form(base, base);
  if (a.is_zero()) {
    if (h.is_zero()) return c.is_zero() ? LinePosition::Contained : LinePosition::Disjoint;
    return LinePosition::Tangent;
  }
  int disc = (h * h - a * c).sign();
  if (disc > 0) return LinePosition::TwoPoints;
  return disc == 0 ? LinePosition::Tangent : LinePosition::Disjoint;
}

PointSet::PointSet(std::vector<Vec3> points) : points_(std::move(points)) {
  const auto n = points_.size();
  auto lbl = [](std::size_t i) { return static_cast<int>(i) + 1; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points_[i] == points_[j]) {
        throw Error(ErrorCode::Duplicate, "points coincide", {lbl(i), lbl(j)});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec3 ij = points_[j] - points_[i];
      for (std::size_t k = j + 1; k < n; ++k) {
        if (cross(ij, points_[k] - points_[i]).is_zero()) {
          throw Error(ErrorCode::Collinear, "three points on a line", {lbl(i), lbl(j), lbl(k)});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec3 ij = points_[j] - points_[i];
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec3 normal = cross(ij, points_[k] - points_[i]);
        for (std::size_t l = k + 1; l < n; ++l) {
          if (dot(normal, points_[l] - points_[i]).is_zero()) {
            throw Error(ErrorCode::Coplanar, "four points in a plane",
                        {lbl(i), lbl(j), lbl(k), lbl(l)});
          }
        }
      }
    }
  }
}

PointSet validate_pointset(std::vector<Vec3> points) { return PointSet(std::move(points)); }

PointSet mirror(const PointSet& p) {
  std::vector<Vec3> out;
  for (const auto& v : p.points()) out.push_back({v.x, v.y, -v.z});
  return PointSet(std::move(out));
}

PointSet transform(const PointSet& p, const AffineMap& map) {
  std::vector<Vec3> out;
  for (const auto& v : p.points()) out.push_back(map.apply_point(v));
  return PointSet(std::move(out));
}

}  // namespace skewlines
