#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewlines {

enum class ErrorCode {
  // input validation
  ParseError,
  ZeroDirection,
  NotSkew,
  Duplicate,
  Collinear,
  Coplanar,
  InvalidTable,
  NotInjective,
  // computation
  Perpendicular,
  ParallelPlanes,
  DegenerateSystem,
  TooFewLines,
  TooFewPoints,
  TooLarge,
  ClassTooSmall,
  NoExternalLine,
  Inconsistent,
  MissingSign,
  SizeMismatch,
  ValidationFailed,
  RealizationFailed,
  CannotPerturb,
  NonGenericDirection,
  Exhausted,
  NoMatch,
  Ambiguous,
  InexactDivision,
};

std::string_view to_string(ErrorCode code);

/// True for errors caused by malformed or degenerate user input (CLI exit 2).
bool is_validation_error(ErrorCode code);

/// Typed failure carrying the offending 1-based labels, if any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<int> labels = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::vector<int> labels_;
};

}  // namespace skewlines
