#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qae/pipeline.hpp"

namespace qae::cli {

struct RunConfig {
  std::string hamiltonian_path;
  std::string ansatz_path;
  /// Alternative inputs for solve/bounds/certify.
  std::string matrices_path;
  std::string report_path;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  SolveOptions tolerances;
  std::string output_path;
  unsigned threads = 0;
  bool timings = false;
};

struct CommandResult {
  Report report;
  int exit_code = 0;
};

/// 0 when the solution carries a global certificate, 1 otherwise (and 0 when
/// there is no solution at all, e.g. for `overlaps`).
int exit_code_for(const Report& report);

CommandResult cmd_demo_h2(const RunConfig& config);
CommandResult cmd_overlaps(const RunConfig& config);
CommandResult cmd_solve(const RunConfig& config);
CommandResult cmd_bounds(const RunConfig& config);
CommandResult cmd_certify(const RunConfig& config);
/// Throws Error(OracleDisagreement) if the pipeline and the oracle differ by
/// more than 1e-8.
CommandResult cmd_random(std::size_t m, std::size_t num_qubits, std::uint64_t seed,
                         const RunConfig& config);

std::string sha256_hex(std::string_view data);
std::string read_file(const std::string& path);

}  // namespace qae::cli
