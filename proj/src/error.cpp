#include "tss/error.hpp"

namespace tss {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::NonSimpleResult: return "NonSimpleResult";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::SeedOverlap: return "SeedOverlap";
    case ErrorKind::ConstructionFailedVerification: return "ConstructionFailedVerification";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace tss
