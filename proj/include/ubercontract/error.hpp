#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ubercontract {

enum class ErrorCode {
  kInvalidArgument,
  kNotOrthogonal,
  kBadVariables,
  kDegenerateTuple,
  kNoPath,
  kEdgeNotIncident,
  kNotGeodesic,
  kAngleTooSmall,
  kBudgetExceeded,
  kVerticesMissing,
  kNotInStabilizer,
  kParse,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotOrthogonal: return "NotOrthogonal";
    case ErrorCode::kBadVariables: return "BadVariables";
    case ErrorCode::kDegenerateTuple: return "DegenerateTuple";
    case ErrorCode::kNoPath: return "NoPath";
    case ErrorCode::kEdgeNotIncident: return "EdgeNotIncident";
    case ErrorCode::kNotGeodesic: return "NotGeodesic";
    case ErrorCode::kAngleTooSmall: return "AngleTooSmall";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kVerticesMissing: return "VerticesMissing";
    case ErrorCode::kNotInStabilizer: return "NotInStabilizer";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

/// Library error carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ubercontract
