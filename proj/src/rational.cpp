#include "skewlines/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "skewlines/error.hpp"

namespace skewlines {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  return Rational(std::move(q));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::Duplicate: return "Duplicate";
    case ErrorCode::Collinear: return "Collinear";
    case ErrorCode::Coplanar: return "Coplanar";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::Perpendicular: return "Perpendicular";
    case ErrorCode::ParallelPlanes: return "ParallelPlanes";
    case ErrorCode::DegenerateSystem: return "DegenerateSystem";
    case ErrorCode::TooFewLines: return "TooFewLines";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ClassTooSmall: return "ClassTooSmall";
    case ErrorCode::NoExternalLine: return "NoExternalLine";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::MissingSign: return "MissingSign";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::RealizationFailed: return "RealizationFailed";
    case ErrorCode::CannotPerturb: return "CannotPerturb";
    case ErrorCode::NonGenericDirection: return "NonGenericDirection";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::InexactDivision: return "InexactDivision";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ZeroDirection:
    case ErrorCode::NotSkew:
    case ErrorCode::Duplicate:
    case ErrorCode::Collinear:
    case ErrorCode::Coplanar:
    case ErrorCode::InvalidTable:
    case ErrorCode::NotInjective:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, std::string message, std::vector<int> labels)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(std::move(message)),
      labels_(std::move(labels)) {}

}  // namespace skewlines
