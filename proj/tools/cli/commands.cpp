#include "cli/commands.hpp"

#include <openssl/evp.h>

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qae/errors.hpp"
#include "qae/matrix_io.hpp"
#include "qae/version.hpp"

namespace qae::cli {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read `" + path + "`");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code_for(const Report& report) {
  if (!report.solution) return 0;
  return report.solution->real.global_certificate ? 0 : 1;
}

namespace {

PipelineOptions pipeline_options(const RunConfig& config) {
  PipelineOptions opts;
  opts.solve = config.tolerances;
  opts.shots = config.shots;
  opts.seed = config.seed;
  opts.build.threads = config.threads;
  opts.record_timings = config.timings;
  return opts;
}

Report from_files(const RunConfig& config, std::string command, Stages stages) {
  if (config.hamiltonian_path.empty() || config.ansatz_path.empty()) {
    throw Error(ErrorCode::ParseError, "--hamiltonian and --ansatz are required");
  }
  const auto h_text = read_file(config.hamiltonian_path);
  const auto a_text = read_file(config.ansatz_path);
  const auto h = parse_hamiltonian(h_text);
  const auto ansatz = parse_ansatz(a_text, h.num_qubits());
  auto report = run_pipeline(h, ansatz, pipeline_options(config), stages);
  report.command = std::move(command);
  report.inputs = {{"hamiltonian", config.hamiltonian_path, sha256_hex(h_text)},
                   {"ansatz", config.ansatz_path, sha256_hex(a_text)}};
  return report;
}

Report from_matrices(const RunConfig& config, std::string command, Stages stages) {
  Report report;
  report.tool_version = kVersion;
  report.command = std::move(command);
  if (config.timings) report.timings = StageTimings{};
  if (!config.matrices_path.empty()) {
    const auto text = read_file(config.matrices_path);
    auto pair = parse_matrix_pair(text);
    report.overlaps = OverlapPair{std::move(pair.D), std::move(pair.E), std::nullopt};
    report.inputs = {{"matrices", config.matrices_path, sha256_hex(text)}};
  } else {
    const auto text = read_file(config.report_path);
    auto source = parse_report(text);
    if (!source.overlaps) throw Error(ErrorCode::ParseError, "report holds no matrices");
    report.overlaps = std::move(source.overlaps);
    report.inputs = {{"report", config.report_path, sha256_hex(text)}};
  }
  run_stages(report, pipeline_options(config), stages);
  return report;
}

Report dispatch(const RunConfig& config, std::string command, Stages stages) {
  if (!config.matrices_path.empty() || !config.report_path.empty()) {
    return from_matrices(config, std::move(command), stages);
  }
  return from_files(config, std::move(command), stages);
}

}  // namespace

CommandResult cmd_demo_h2(const RunConfig& config) {
  auto report = run_pipeline(h2_hamiltonian(), h2_ansatz(), pipeline_options(config));
  report.command = "demo-h2";
  report.oracle_energy = -std::sqrt(0.68);
  const int code = exit_code_for(report);
  return {std::move(report), code};
}

CommandResult cmd_overlaps(const RunConfig& config) {
  auto report = from_files(config, "overlaps", Stages{false, false});
  return {std::move(report), 0};
}

CommandResult cmd_solve(const RunConfig& config) {
  auto report = dispatch(config, "solve", Stages{true, false});
  const int code = exit_code_for(report);
  return {std::move(report), code};
}

CommandResult cmd_bounds(const RunConfig& config) {
  auto report = dispatch(config, "bounds", Stages{true, true});
  const int code = exit_code_for(report);
  return {std::move(report), code};
}

CommandResult cmd_certify(const RunConfig& config) {
  auto report = dispatch(config, "certify", Stages{true, false});
  const int code = exit_code_for(report);
  return {std::move(report), code};
}

CommandResult cmd_random(std::size_t m, std::size_t num_qubits, std::uint64_t seed,
                         const RunConfig& config) {
  const auto instance = random_instance(m, num_qubits, seed);
  auto opts = pipeline_options(config);
  opts.seed = seed;
  auto report = run_pipeline(instance.hamiltonian, instance.ansatz, opts);
  report.command = "random";
  report.inputs = {
      {"hamiltonian", "random:m=" + std::to_string(m) + ",qubits=" + std::to_string(num_qubits) +
                          ",seed=" + std::to_string(seed),
       sha256_hex(to_text(instance.hamiltonian))},
      {"ansatz", "random", sha256_hex(to_text(instance.ansatz))}};

  const auto [d, e] = working_problem(*report.overlaps);
  if (d.rows() <= kOracleMaxSize) {
    const double reference = oracle_min(d, e, opts.solve.e_truncation_rel);
    report.oracle_energy = reference;
    if (std::abs(reference - report.solution->energy) > 1e-8) {
      throw Error(ErrorCode::OracleDisagreement,
                  "solver energy " + std::to_string(report.solution->energy) +
                      " disagrees with oracle " + std::to_string(reference));
    }
  } else {
    report.diagnostics.push_back("oracle skipped: working dimension exceeds " +
                                 std::to_string(kOracleMaxSize));
  }
  const int code = exit_code_for(report);
  return {std::move(report), code};
}

}  // namespace qae::cli
