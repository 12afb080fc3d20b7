#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamejumps {

enum class Errc {
  kInvalidPrime,
  kNotIntegral,
  kFieldMismatch,
  kZeroPolynomial,
  kParseError,
  kEmptyPolynomial,
  kUnknownVariable,
  kDegeneratePolygon,
  kOutsidePolygon,
  kIndeterminateSystem,
  kNotInterior,
  kHypothesisViolation,
  kNotHolomorphic,
  kOutOfRange,
  kInvalidDegree,
  kNotCoprime,
  kSingularMatrix,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Thrown by the polynomial parser; carries the byte offset of the offending input.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t offset, const std::string& message)
      : Error(code, message + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tamejumps
