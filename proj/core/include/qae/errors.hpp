#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qae {

enum class ErrorCode {
  EmptyHamiltonian,
  ShapeMismatch,
  ParseError,
  OracleSizeExceeded,
  SizeExceeded,
  NonHermitianHamiltonian,
  InvalidShots,
  DegenerateConstraint,
  NotSymmetric,
  BracketFailure,
  DegenerateRelaxation,
  OracleDisagreement,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by malformed or inconsistent input (as opposed to
/// numerical breakdown inside the solver stages).
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  /// 1-based line number for parse errors, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace qae
