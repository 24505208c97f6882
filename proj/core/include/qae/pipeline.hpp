#pragma once

// End-to-end runs: overlaps -> solve -> bounds/certificate, and the report
// document that records them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qae/circuit.hpp"
#include "qae/overlaps.hpp"
#include "qae/pauli.hpp"
#include "qae/qcqp.hpp"
#include "qae/realify.hpp"
#include "qae/relax.hpp"

namespace qae {

struct PipelineOptions {
  SolveOptions solve;
  BoundOptions bounds;
  BuildOptions build;
  /// Unset means exact overlaps.
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  /// Timings make reports run-dependent, so they are opt-in.
  bool record_timings = false;
};

struct InputDigest {
  std::string name;
  std::string path;
  std::string sha256;
};

struct StageTimings {
  double overlaps_ms = 0.0;
  double solve_ms = 0.0;
  double bounds_ms = 0.0;
};

struct Report {
  std::string command;
  std::string tool_version;
  std::vector<InputDigest> inputs;
  std::optional<OverlapPair> overlaps;
  std::optional<HermitianSolution> solution;
  std::optional<BoundReport> bounds;
  /// Independent reference energy, when one was computed.
  std::optional<double> oracle_energy;
  std::optional<StageTimings> timings;
  std::vector<std::string> diagnostics;
};

OverlapPair compute_overlaps(const Hamiltonian& h, const AnsatzSet& ansatz,
                             const PipelineOptions& opts);

/// The real problem that the solver and the bounds operate on: the real part
/// for real data, the realified 2m form otherwise.
std::pair<RealMatrix, RealMatrix> working_problem(const OverlapPair& overlaps);

struct Stages {
  bool solve = true;
  bool bounds = true;
};

/// Fills report.solution and report.bounds from report.overlaps.
void run_stages(Report& report, const PipelineOptions& opts, Stages stages = {});

/// Full pipeline from a Hamiltonian and Ansatz.
Report run_pipeline(const Hamiltonian& h, const AnsatzSet& ansatz, const PipelineOptions& opts,
                    Stages stages = {});

/// JSON document, keys in fixed order; see README for the schema.
std::string to_json(const Report& report);
/// Throws ParseError on malformed documents.
Report parse_report(std::string_view json);

/// Random real Hamiltonian (n_terms Pauli strings, N(0,1) coefficients) and
/// random-circuit Ansatz of m states, reproducible from `seed`.
struct RandomInstance {
  Hamiltonian hamiltonian;
  AnsatzSet ansatz;
};
RandomInstance random_instance(std::size_t m, std::size_t num_qubits, std::uint64_t seed,
                               std::size_t n_terms = 0, std::size_t gates_per_state = 0);

}  // namespace qae
