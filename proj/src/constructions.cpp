#include "skewlines/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "skewlines/error.hpp"
#include "skewlines/invariants.hpp"

namespace skewlines {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = size();
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (int i = 0; i < k; ++i) {
    int v = images_[static_cast<std::size_t>(i)];
    if (v < 1 || v > k) {
      throw Error(ErrorCode::NotInjective, "image " + std::to_string(v) + " outside 1.." + std::to_string(k),
                  {i + 1});
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::NotInjective, "image " + std::to_string(v) + " repeated", {i + 1});
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  bool has_sep = text.find_first_of(", ") != std::string_view::npos;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    images.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
      if (!has_sep) flush();
    } else if (ch == ',' || ch == ' ') {
      flush();
    } else {
      throw Error(ErrorCode::ParseError, "bad permutation '" + std::string(text) + "'");
    }
  }
  flush();
  if (images.empty()) throw Error(ErrorCode::ParseError, "empty permutation");
  return Permutation(std::move(images));
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::reversed() const { return Permutation({images_.rbegin(), images_.rend()}); }

std::string Permutation::str() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  return s;
}

Configuration jc(const Permutation& sigma) {
  const int k = sigma.size();
  if (k < 2) throw Error(ErrorCode::SizeMismatch, "jc needs at least 2 lines");
  std::vector<OrientedLine> lines;
  for (int i = 1; i <= k; ++i) {
    Vec3 a{i, 0, 0};
    Vec3 b{0, sigma(i), 1};
    lines.emplace_back(a, b - a);
  }
  try {
    return Configuration(std::move(lines));
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationFailed, std::string("jc(") + sigma.str() + "): " + e.what(), e.labels());
  }
}

Configuration ruled_family(int eps, int p) {
  if (p < 1) throw Error(ErrorCode::TooFewLines, "ruled family needs p >= 1");
  std::vector<OrientedLine> lines;
  for (int i = 0; i < p; ++i) {
    Rational t(i);
    Rational q = 1 + t * t;
    Vec3 base{(1 - t * t) / q, 2 * t / q, 0};
    Vec3 dir = eps > 0 ? Vec3{2 * t, t * t - 1, q} : Vec3{-2 * t, 1 - t * t, q};
    lines.emplace_back(base, dir);
  }
  return Configuration(std::move(lines));
}

namespace {

// Affine map sending the z-axis onto the line, squeezing transverse coordinates by r.
AffineMap tube_map(const OrientedLine& axis, const Rational& r) {
  auto [e1, e2] = transverse_frame(axis.dir());
  const Vec3& d = axis.dir();
  Vec3 c1 = e1 * r;
  Vec3 c2 = e2 * r;
  AffineMap m;
  m.linear = {Vec3{c1.x, c2.x, d.x}, Vec3{c1.y, c2.y, d.y}, Vec3{c1.z, c2.z, d.z}};
  m.shift = axis.base();
  return m;
}

class Realizer {
 public:
  explicit Realizer(const TripleTable& expected) : expected_(expected) {}

  std::vector<OrientedLine> realize(const SymbolNode& node, int lo) {
    if (node.is_bundle()) return ruled_family(node.sign.value_or(1), node.bundle).lines();

    const int k = static_cast<int>(node.children.size());
    Configuration axes = ruled_family(node.sign.value_or(1), k);
    std::vector<std::vector<OrientedLine>> parts;
    int offset = lo;
    for (const auto& child : node.children) {
      parts.push_back(realize(child, offset));
      offset += child.leaf_count();
    }
    std::vector<int> range(static_cast<std::size_t>(offset - lo));
    for (int i = 0; i < offset - lo; ++i) range[static_cast<std::size_t>(i)] = lo + i;
    TripleTable want = expected_.restricted(range);

    Rational r(1, 4);
    for (int attempt = 0; attempt <= 20; ++attempt, r = r / 2) {
      std::vector<OrientedLine> out;
      for (int i = 0; i < k; ++i) {
        AffineMap m = tube_map(axes.line(i), r);
        for (const auto& l : parts[static_cast<std::size_t>(i)]) out.push_back(m.apply(l));
      }
      try {
        Configuration c(out);
        if (TripleTable::from_configuration(c) == want) return out;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSkew) throw;
      }
    }
    throw Error(ErrorCode::RealizationFailed, "could not realize subtree at leaf " + std::to_string(lo + 1));
  }

 private:
  const TripleTable& expected_;
};

// The cubic det along the straight path has Bernstein coefficients of one strict sign.
bool stays_skew(const OrientedLine& a0, const OrientedLine& a1, const OrientedLine& b0, const OrientedLine& b1) {
  // det(u(s), v(s), w(s)) with u = da, v = db, w = base_b - base_a, each linear in s.
  Vec3 u0 = a0.dir(), u1 = a1.dir() - a0.dir();
  Vec3 v0 = b0.dir(), v1 = b1.dir() - b0.dir();
  Vec3 w0 = b0.base() - a0.base();
  Vec3 w1 = (b1.base() - a1.base()) - w0;
  Rational c0 = det(u0, v0, w0);
  Rational c1 = det(u1, v0, w0) + det(u0, v1, w0) + det(u0, v0, w1);
  Rational c2 = det(u1, v1, w0) + det(u1, v0, w1) + det(u0, v1, w1);
  Rational c3 = det(u1, v1, w1);
  Rational bern[4] = {c0, c0 + c1 / 3, c0 + c1 * Rational(2, 3) + c2 / 3, c0 + c1 + c2 + c3};
  const int s = bern[0].sign();
  return s != 0 && std::all_of(std::begin(bern), std::end(bern), [s](const Rational& b) { return b.sign() == s; });
}

bool straight_path_is_isotopy(const Configuration& from, const std::vector<OrientedLine>& to) {
  const int n = from.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!stays_skew(from.line(i), to[static_cast<std::size_t>(i)], from.line(j), to[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Configuration build_symbol(const DecompSymbol& s) {
  const int n = s.leaf_count();
  TripleTable expected = n >= 3 ? symbol_to_table(s) : TripleTable(n);
  Realizer realizer(expected);
  Configuration c(realizer.realize(s.root(), 0));
  if (TripleTable::from_configuration(c) != expected) {
    throw Error(ErrorCode::RealizationFailed, "realization of " + s.str() + " has the wrong table");
  }
  return c;
}

AbstractConfiguration suspension(const AbstractConfiguration& a) { return {a.table, a.k + 1}; }

bool stable_equivalent(const AbstractConfiguration& a, const AbstractConfiguration& b) {
  if (a.table.size() != b.table.size()) {
    throw Error(ErrorCode::SizeMismatch, "tables have different sizes");
  }
  return canonical_table(a.table) == canonical_table(b.table);
}

bool joins_rigidly_isotopic(const Permutation& s1, const Permutation& s2) {
  if (s1.size() != s2.size()) throw Error(ErrorCode::SizeMismatch, "permutations have different sizes");
  if (s1.size() > 8) throw Error(ErrorCode::TooLarge, "joins_rigidly_isotopic needs k <= 8");
  return canonical_table(TripleTable::from_configuration(jc(s1))) ==
         canonical_table(TripleTable::from_configuration(jc(s2)));
}

Configuration perturb(const Configuration& c, const Rational& scale, std::uint64_t seed) {
  if (scale.is_zero()) return c;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> unit(-1000, 1000);
  const TripleTable before = TripleTable::from_configuration(c);
  std::vector<std::array<long, 6>> offsets(static_cast<std::size_t>(c.size()));
  for (auto& o : offsets) {
    for (auto& v : o) v = unit(rng);
  }
  Rational s = abs(scale) / 1000;
  for (int attempt = 0; attempt <= 20; ++attempt, s = s / 2) {
    std::vector<OrientedLine> out;
    bool zero_dir = false;
    for (int i = 0; i < c.size(); ++i) {
      const auto& o = offsets[static_cast<std::size_t>(i)];
      const auto& l = c.line(i);
      Vec3 base = l.base() + Vec3{s * o[0], s * o[1], s * o[2]};
      Vec3 dir = l.dir() + Vec3{s * o[3], s * o[4], s * o[5]};
      if (dir.is_zero()) {
        zero_dir = true;
        break;
      }
      out.emplace_back(base, dir);
    }
    if (zero_dir || !straight_path_is_isotopy(c, out)) continue;
    Configuration result(std::move(out));
    if (TripleTable::from_configuration(result) == before) return result;
  }
  throw Error(ErrorCode::CannotPerturb, "no isotopic perturbation found");
}

}  // namespace skewlines
