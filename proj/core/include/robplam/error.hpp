#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace robplam {

/// Stable error categories. The CLI maps these onto exit codes and the
/// machine-readable error record.
enum class ErrorCode {
  Usage,           // bad arguments or configuration
  DatasetSchema,   // requested column missing from a dataset
  Data,            // unparseable or empty data, dimension mismatches
  Numerical,       // singular systems, degenerate scales, solver failure
  Io,              // unreadable or unwritable paths
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace robplam
