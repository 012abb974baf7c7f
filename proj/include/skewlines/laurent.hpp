#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewlines {

/// Integer Laurent polynomial in A. No zero coefficient is ever stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  /// c * A^e.
  static LaurentPoly monomial(std::int64_t c, int e);
  static LaurentPoly from_terms(const std::vector<std::pair<int, std::int64_t>>& terms);
  /// Accepts the output of str() and the usual "A^13 + A^11 + 4A^7 - 2A^-1 + 3" forms.
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int e) const;
  int max_exponent() const;
  int min_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(int e) const;
  /// Multiply by A^e.
  LaurentPoly shifted(int e) const;

  /// Exact quotient; throws InexactDivision when d does not divide *this.
  LaurentPoly divided_by(const LaurentPoly& d) const;

  /// Terms by decreasing exponent: "1*A^13 + 4*A^7 - 2*A^-1 + 3"; exponent 0 as a bare integer.
  std::string str() const;
  /// [exponent, coefficient] pairs by decreasing exponent.
  std::vector<std::pair<int, std::int64_t>> pairs() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(int e, std::int64_t c);
  Terms terms_;
};

/// A -> A^-1.
LaurentPoly mirror_poly(const LaurentPoly& p);

/// -A^2 - A^-2.
LaurentPoly delta_poly();

}  // namespace skewlines
