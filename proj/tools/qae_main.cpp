// qae: overlap matrices, P1 solve, bounds and certificates from the shell.
//
// Exit codes: 0 success with certificate, 1 success without certificate,
// 2 input errors, 3 numerical failures.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "qae/errors.hpp"
#include "qae/version.hpp"

namespace {

unsigned threads_from_env() {
  const char* raw = std::getenv("QAE_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  return *end == '\0' ? static_cast<unsigned>(value) : 0;
}

void emit(const qae::cli::CommandResult& result, const std::string& path) {
  const auto text = qae::to_json(result.report);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qae::Error(qae::ErrorCode::ParseError, "cannot write `" + path + "`");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum assisted eigensolver: overlaps, QCQP solve, bounds, certificates"};
  app.set_version_flag("--version", std::string(qae::kVersion));
  app.require_subcommand(1);

  qae::cli::RunConfig config;
  config.threads = threads_from_env();
  std::uint64_t shots = 0;
  std::size_t random_m = 4;
  std::size_t random_qubits = 3;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", config.output_path, "Report path (stdout when omitted)");
    sub->add_option("--tol-kkt", config.tolerances.kkt_tol, "KKT residual tolerance");
    sub->add_option("--tol-psd", config.tolerances.psd_tol, "PSD tolerance for certificates");
    sub->add_option("--seed", config.seed, "Seed for sampling and rounding");
    sub->add_option("--shots", shots, "Shots per Hadamard test (exact overlaps when omitted)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--timings", config.timings, "Record per-stage timings in the report");
  };
  auto add_inputs = [&](CLI::App* sub, bool allow_matrices) {
    sub->add_option("--hamiltonian", config.hamiltonian_path, "Hamiltonian text file");
    sub->add_option("--ansatz", config.ansatz_path, "Ansatz text file");
    if (allow_matrices) {
      sub->add_option("--matrices", config.matrices_path, "D/E matrix file instead of circuits");
      sub->add_option("--report", config.report_path, "Take D/E from an earlier report");
    }
  };

  auto* demo = app.add_subcommand("demo-h2", "Built-in two-qubit H2 example");
  add_common(demo);
  auto* overlaps = app.add_subcommand("overlaps", "Build D and E only");
  add_common(overlaps);
  add_inputs(overlaps, false);
  auto* solve = app.add_subcommand("solve", "Build D and E and solve P1");
  add_common(solve);
  add_inputs(solve, true);
  auto* bounds = app.add_subcommand("bounds", "Solve plus dual/SDP bounds and rounding");
  add_common(bounds);
  add_inputs(bounds, true);
  auto* certify = app.add_subcommand("certify", "Solve and report the global certificate");
  add_common(certify);
  add_inputs(certify, true);
  auto* random = app.add_subcommand("random", "Random instance cross-checked against the oracle");
  add_common(random);
  random->add_option("--m", random_m, "Number of Ansatz states")->check(CLI::PositiveNumber);
  random->add_option("--qubits", random_qubits, "Qubit count")->check(CLI::Range(1, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (shots > 0) config.shots = shots;

  try {
    qae::cli::CommandResult result;
    if (*demo) {
      result = qae::cli::cmd_demo_h2(config);
    } else if (*overlaps) {
      result = qae::cli::cmd_overlaps(config);
    } else if (*solve) {
      result = qae::cli::cmd_solve(config);
    } else if (*bounds) {
      result = qae::cli::cmd_bounds(config);
    } else if (*certify) {
      result = qae::cli::cmd_certify(config);
    } else {
      result = qae::cli::cmd_random(random_m, random_qubits, config.seed, config);
    }
    for (const auto& note : result.report.diagnostics) std::cerr << "warning: " << note << "\n";
    if (result.report.solution) {
      std::cerr << "energy " << result.report.solution->energy << ", certificate "
                << (result.report.solution->real.global_certificate ? "true" : "false")
                << "\n";
    }
    emit(result, config.output_path);
    return result.exit_code;
  } catch (const qae::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qae::is_input_error(e.code()) || e.code() == qae::ErrorCode::ParseError ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
