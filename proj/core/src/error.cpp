#include "robplam/error.hpp"

namespace robplam {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Usage: return "USAGE";
    case ErrorCode::DatasetSchema: return "DATASET_SCHEMA";
    case ErrorCode::Data: return "DATA";
    case ErrorCode::Numerical: return "NUMERICAL";
    case ErrorCode::Io: return "IO";
  }
  return "UNKNOWN";
}

}  // namespace robplam
