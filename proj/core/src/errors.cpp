#include "qae/errors.hpp"

namespace qae {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyHamiltonian: return "EmptyHamiltonian";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OracleSizeExceeded: return "OracleSizeExceeded";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::NonHermitianHamiltonian: return "NonHermitianHamiltonian";
    case ErrorCode::InvalidShots: return "InvalidShots";
    case ErrorCode::DegenerateConstraint: return "DegenerateConstraint";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::DegenerateRelaxation: return "DegenerateRelaxation";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyHamiltonian:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::ParseError:
    case ErrorCode::OracleSizeExceeded:
    case ErrorCode::SizeExceeded:
    case ErrorCode::NonHermitianHamiltonian:
    case ErrorCode::InvalidShots:
      return true;
    default:
      return false;
  }
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::size_t line) {
  std::string out(to_string(code));
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(decorate(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace qae
