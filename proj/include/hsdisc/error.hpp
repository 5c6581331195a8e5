#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsdisc {

enum class ErrorCode {
  kSingularMatrix,
  kZeroDenominator,
  kOutOfRange,
  kDimensionMismatch,
  kEmptyInstance,
  kEmptyColorClass,
  kAffinelyDependent,
  kTooFewValues,
  kTooFewPoints,
  kWrongDimension,
  kTooLarge,
  kUnsupportedK,
  kGammaOutOfRange,
  kNoStraddledPair,
  kBoundaryThroughPoint,
  kNonzeroSum,
  kNotDegenerate,
  kInfeasiblePlant,
  kParse,
  kInvalidArgument,
};

// Stable machine-readable name, e.g. "SingularMatrix".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hsdisc
