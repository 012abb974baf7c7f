#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewlines/rational.hpp"

namespace skewlines {

struct Vec3 {
  Rational x, y, z;

  Vec3() = default;
  Vec3(Rational x_, Rational y_, Rational z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(const Rational& s) { x *= s; y *= s; z *= s; return *this; }
  Vec3 operator-() const { return {-x, -y, -z}; }

  friend Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend Vec3 operator*(Vec3 a, const Rational& s) { return a *= s; }
  friend Vec3 operator*(const Rational& s, Vec3 a) { return a *= s; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

Rational dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
/// det of the 3x3 matrix with rows a, b, c (= a . (b x c)).
Rational det(const Vec3& a, const Vec3& b, const Vec3& c);
std::string to_string(const Vec3& v);

/// (e1, e2) with e1 a coordinate axis not parallel to d and e2 = d x e1, so that
/// det(e1, e2, d) > 0. Throws ZeroDirection.
std::pair<Vec3, Vec3> transverse_frame(const Vec3& d);

/// A line with an orientation-bearing direction; dir is never zero.
class OrientedLine {
 public:
  OrientedLine(Vec3 base, Vec3 dir);

  const Vec3& base() const { return base_; }
  const Vec3& dir() const { return dir_; }
  Vec3 point_at(const Rational& t) const { return base_ + dir_ * t; }
  OrientedLine reversed() const { return {base_, -dir_}; }

  friend bool operator==(const OrientedLine&, const OrientedLine&) = default;

 private:
  Vec3 base_;
  Vec3 dir_;
};

/// Neither parallel nor intersecting.
bool skew(const OrientedLine& a, const OrientedLine& b);

/// sign(det(dir_a, dir_b, base_b - base_a)); the right-handed standard frame gives +1.
/// Throws NotSkew.
int lk_pair(const OrientedLine& a, const OrientedLine& b);

/// Returns (a, b') with b' oriented so that dir_a . dir_b' > 0.
/// Throws NotSkew, or Perpendicular when the directions are orthogonal.
std::pair<OrientedLine, OrientedLine> canonical_semiorientation(const OrientedLine& a,
                                                                const OrientedLine& b);

/// Product of the three pairwise linking numbers; independent of orientations.
int lk_triple(const OrientedLine& a, const OrientedLine& b, const OrientedLine& c);

/// Reflection z -> -z.
OrientedLine mirror(const OrientedLine& l);

/// Affine map p -> linear * p + shift, linear given by rows.
struct AffineMap {
  std::array<Vec3, 3> linear{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  Vec3 shift{0, 0, 0};

  Vec3 apply_point(const Vec3& p) const;
  Vec3 apply_vector(const Vec3& v) const;
  OrientedLine apply(const OrientedLine& l) const;
  Rational determinant() const { return det(linear[0], linear[1], linear[2]); }
};

/// Ordered, labeled set of pairwise skew lines (labels are 1-based in errors and I/O).
class Configuration {
 public:
  /// Throws NotSkew(i, j) for the first offending pair.
  explicit Configuration(std::vector<OrientedLine> lines);

  int size() const { return static_cast<int>(lines_.size()); }
  const OrientedLine& line(int i) const { return lines_[static_cast<std::size_t>(i)]; }
  const std::vector<OrientedLine>& lines() const { return lines_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<OrientedLine> lines_;
};

Configuration mirror(const Configuration& c);
Configuration transform(const Configuration& c, const AffineMap& map);
/// New configuration whose line new_label[i] is old line i (0-based permutation).
Configuration relabel(const Configuration& c, std::span<const int> new_label);

/// Vertices indexed by bit pattern: bit 0 selects the end along a's direction,
/// bit 1 along b's, bit 2 along c's.
struct Parallelepiped {
  std::array<Vec3, 8> vertices;
};

/// The unique parallelepiped with three pairwise skew edges on a, b, c.
/// Throws NotSkew or ParallelPlanes (det of the directions is 0).
Parallelepiped parallelepiped_of_triple(const OrientedLine& a, const OrientedLine& b,
                                        const OrientedLine& c);

/// Quadric surface X^T M X = 0 in homogeneous coordinates X = (x, y, z, 1).
/// Stored normalized: integer entries, content 1, first nonzero entry positive.
class Quadric {
 public:
  using Matrix = std::array<std::array<Rational, 4>, 4>;

  /// Throws DegenerateSystem when asymmetric or zero.
  explicit Quadric(Matrix m);

  const Matrix& matrix() const { return m_; }
  Rational evaluate(const Vec3& p) const;

  friend bool operator==(const Quadric&, const Quadric&) = default;

 private:
  Matrix m_;
};

/// x^2 + y^2 - z^2 = 1.
Quadric standard_hyperboloid();

/// The quadric containing three pairwise skew lines.
/// Throws NotSkew, ParallelPlanes, or DegenerateSystem if the solution space is not 1-dimensional.
Quadric quadric_through(const OrientedLine& a, const OrientedLine& b, const OrientedLine& c);

enum class LinePosition { Disjoint, Tangent, TwoPoints, Contained };

std::string to_string(LinePosition p);

/// Tangent covers every case with exactly one real intersection point (a double
/// root, or a single root when the line runs along an asymptotic direction).
LinePosition line_quadric_position(const Quadric& q, const OrientedLine& l);

/// Finite point set with no duplicates, no 3 collinear and no 4 coplanar.
class PointSet {
 public:
  /// Throws Duplicate(i,j), Collinear(i,j,k) or Coplanar(i,j,k,l).
  explicit PointSet(std::vector<Vec3> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Vec3& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<Vec3>& points() const { return points_; }

 private:
  std::vector<Vec3> points_;
};

PointSet validate_pointset(std::vector<Vec3> points);
PointSet mirror(const PointSet& p);
PointSet transform(const PointSet& p, const AffineMap& map);

}  // namespace skewlines
