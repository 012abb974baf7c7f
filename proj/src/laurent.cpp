#include "skewlines/laurent.hpp"

#include <cctype>
#include <cstdlib>

#include "skewlines/error.hpp"

namespace skewlines {

void LaurentPoly::add_term(int e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, std::int64_t>>& terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

std::int64_t LaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto [e1, c1] : a.terms_) {
    for (auto [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
  }
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InexactDivision, "negative power of a Laurent polynomial");
  LaurentPoly r = monomial(1, 0);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
  LaurentPoly r;
  for (auto [k, c] : terms_) r.terms_.emplace(k + e, c);
  return r;
}

LaurentPoly LaurentPoly::divided_by(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::InexactDivision, "division by zero polynomial");
  const int dtop = d.max_exponent();
  const std::int64_t lead = d.coeff(dtop);
  LaurentPoly rem = *this;
  LaurentPoly q;
  while (!rem.is_zero()) {
    const int top = rem.max_exponent();
    if (top - dtop + d.min_exponent() < min_exponent()) break;
    const std::int64_t c = rem.coeff(top);
    if (c % lead != 0) break;
    LaurentPoly step = monomial(c / lead, top - dtop);
    q += step;
    rem -= step * d;
  }
  if (!rem.is_zero()) {
    throw Error(ErrorCode::InexactDivision, "(" + str() + ") is not divisible by (" + d.str() + ")");
  }
  return q;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += std::to_string(mag);
      continue;
    }
    s += std::to_string(mag) + "*A^" + std::to_string(e);
  }
  return s;
}

std::vector<std::pair<int, std::int64_t>> LaurentPoly::pairs() const {
  std::vector<std::pair<int, std::int64_t>> out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.emplace_back(it->first, it->second);
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t == "0") return {};
  LaurentPoly p;
  std::size_t i = 0;
  auto fail = [&] { throw Error(ErrorCode::ParseError, "bad polynomial '" + std::string(text) + "'"); };
  auto read_int = [&](std::int64_t& out) {
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (start == i) return false;
    out = std::stoll(t.substr(start, i - start));
    return true;
  };
  if (t.empty()) fail();
  while (i < t.size()) {
    int sgn = 1;
    if (t[i] == '+' || t[i] == '-') {
      sgn = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::int64_t c = 1;
    bool has_c = read_int(c);
    if (i < t.size() && t[i] == '*') ++i;
    int e = 0;
    if (i < t.size() && t[i] == 'A') {
      ++i;
      e = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        int esign = 1;
        if (i < t.size() && (t[i] == '-' || t[i] == '+')) {
          esign = t[i] == '-' ? -1 : 1;
          ++i;
        }
        std::int64_t ev = 0;
        if (!read_int(ev)) fail();
        e = esign * static_cast<int>(ev);
      }
    } else if (!has_c) {
      fail();
    }
    p.add_term(e, sgn * c);
  }
  return p;
}

LaurentPoly mirror_poly(const LaurentPoly& p) {
  std::vector<std::pair<int, std::int64_t>> terms;
  for (auto [e, c] : p.terms()) terms.emplace_back(-e, c);
  return LaurentPoly::from_terms(terms);
}

LaurentPoly delta_poly() { return LaurentPoly::from_terms({{2, -1}, {-2, -1}}); }

}  // namespace skewlines
