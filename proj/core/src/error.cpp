#include "tamejumps/error.hpp"

namespace tamejumps {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kInvalidPrime: return "InvalidPrime";
    case Errc::kNotIntegral: return "NotIntegral";
    case Errc::kFieldMismatch: return "FieldMismatch";
    case Errc::kZeroPolynomial: return "ZeroPolynomial";
    case Errc::kParseError: return "ParseError";
    case Errc::kEmptyPolynomial: return "EmptyPolynomial";
    case Errc::kUnknownVariable: return "UnknownVariable";
    case Errc::kDegeneratePolygon: return "DegeneratePolygon";
    case Errc::kOutsidePolygon: return "OutsidePolygon";
    case Errc::kIndeterminateSystem: return "IndeterminateSystem";
    case Errc::kNotInterior: return "NotInterior";
    case Errc::kHypothesisViolation: return "HypothesisViolation";
    case Errc::kNotHolomorphic: return "NotHolomorphic";
    case Errc::kOutOfRange: return "OutOfRange";
    case Errc::kInvalidDegree: return "InvalidDegree";
    case Errc::kNotCoprime: return "NotCoprime";
    case Errc::kSingularMatrix: return "SingularMatrix";
  }
  return "Unknown";
}

}  // namespace tamejumps
