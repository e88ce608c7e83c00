// Error type shared by every module. Each failure carries a stable machine
// readable code that the CLI emits verbatim.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropabel {

enum class ErrorCode {
  SingularMatrix,
  NotSymmetric,
  NotHermitian,
  DivisionByZero,
  ParseError,
  NonIntegralDegree,
  WallDegeneracy,
  NotTrivalent,
  FlatVertex,
  NotDivisible,
  InvalidCurve,
  NoTropicalPolarization,
  DegenerateB,
  NonIntegralExponents,
  DegreeMismatch,
  UnsupportedGenus,
  NonGenericConfig,
  BoundsUnstable,
  MissingPrimitiveValue,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace tropabel
