#include "lendens/error.hpp"

namespace lendens {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyGenerators: return "EmptyGenerators";
    case ErrorCode::kNonCoprime: return "NonCoprime";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kMalformedRelation: return "MalformedRelation";
    case ErrorCode::kNoPositiveGrading: return "NoPositiveGrading";
    case ErrorCode::kNotAtomic: return "NotAtomic";
    case ErrorCode::kTagMismatch: return "TagMismatch";
    case ErrorCode::kNotInMonoid: return "NotInMonoid";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kIndexSpaceMismatch: return "IndexSpaceMismatch";
    case ErrorCode::kIncompleteSet: return "IncompleteSet";
    case ErrorCode::kNoLdElements: return "NoLdElements";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidIndex: return "InvalidIndex";
    case ErrorCode::kInvalidLevel: return "InvalidLevel";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace lendens
