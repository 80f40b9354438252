#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linjac {

enum class Errc {
  CompositeModulus,
  DivisionByZero,
  DimensionMismatch,
  ZeroSection,
  AllZeroSections,
  EmptySpace,
  PreconditionDegree,
  PreconditionCodim,
  InconsistentPrecomp,
  TagMismatch,
  SingularCurve,
  BadCharacteristic,
  InsufficientRationalPoints,
  MalformedFile,
  VersionMismatch,
  CurveMismatch,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace linjac
