#include "qae/pipeline.hpp"

#include <chrono>
#include <numbers>
#include <random>

#include "json.hpp"

#include "qae/errors.hpp"
#include "qae/version.hpp"

namespace qae {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

OverlapPair compute_overlaps(const Hamiltonian& h, const AnsatzSet& ansatz,
                             const PipelineOptions& opts) {
  if (opts.shots) {
    return build_overlap_matrices_sampled(h, ansatz, *opts.shots, opts.seed, opts.build);
  }
  return build_overlap_matrices(h, ansatz, opts.build);
}

std::pair<RealMatrix, RealMatrix> working_problem(const OverlapPair& overlaps) {
  if (has_imaginary_part(overlaps.D) || has_imaginary_part(overlaps.E)) {
    auto p = realify(overlaps.D, overlaps.E);
    return {std::move(p.D), std::move(p.E)};
  }
  return {real_part(overlaps.D), real_part(overlaps.E)};
}

void run_stages(Report& report, const PipelineOptions& opts, Stages stages) {
  if (!report.overlaps) throw Error(ErrorCode::ShapeMismatch, "report has no overlap matrices");
  if (!stages.solve) return;
  auto start = Clock::now();
  report.solution = solve_hermitian_p1(report.overlaps->D, report.overlaps->E, opts.solve);
  if (report.timings) report.timings->solve_ms = elapsed_ms(start);
  if (!stages.bounds) return;
  start = Clock::now();
  const auto [d, e] = working_problem(*report.overlaps);
  auto bound_opts = opts.bounds;
  bound_opts.rounding_seed = opts.seed;
  bound_opts.dual.solve = opts.solve;
  bound_opts.sdp.solve = opts.solve;
  report.bounds = compute_bounds(d, e, report.solution->energy, bound_opts);
  if (report.timings) report.timings->bounds_ms = elapsed_ms(start);
}

Report run_pipeline(const Hamiltonian& h, const AnsatzSet& ansatz, const PipelineOptions& opts,
                    Stages stages) {
  Report report;
  report.tool_version = kVersion;
  if (opts.record_timings) report.timings = StageTimings{};
  const auto start = Clock::now();
  const auto states = ansatz.prepare_states();
  report.diagnostics = distinctness_diagnostics(states);
  report.overlaps = opts.shots ? build_overlap_matrices_sampled(h, states, *opts.shots,
                                                                opts.seed, opts.build)
                               : build_overlap_matrices(h, states, opts.build);
  if (report.timings) report.timings->overlaps_ms = elapsed_ms(start);
  run_stages(report, opts, stages);
  return report;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using json = nlohmann::ordered_json;

json real_rows(const RealMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(json(std::vector<double>(m.row(i).begin(), m.row(i).end())));
  }
  return rows;
}

json complex_matrix(const ComplexMatrix& m) {
  return json{{"re", real_rows(real_part(m))}, {"im", real_rows(imag_part(m))}};
}

json complex_vector(const ComplexVector& v) {
  std::vector<double> re, im;
  for (const auto& x : v) {
    re.push_back(x.real());
    im.push_back(x.imag());
  }
  return json{{"re", re}, {"im", im}};
}

RealMatrix read_rows(const json& rows) {
  const std::size_t n = rows.size();
  const std::size_t cols = n ? rows.at(0).size() : 0;
  RealMatrix out(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows.at(i).size() != cols) throw Error(ErrorCode::ParseError, "ragged matrix in report");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows.at(i).at(j).get<double>();
  }
  return out;
}

ComplexMatrix read_complex_matrix(const json& j) {
  const auto re = read_rows(j.at("re"));
  const auto im = read_rows(j.at("im"));
  if (re.rows() != im.rows() || re.cols() != im.cols()) {
    throw Error(ErrorCode::ParseError, "re/im shapes differ in report");
  }
  ComplexMatrix out(re.rows(), re.cols());
  for (std::size_t i = 0; i < re.rows(); ++i)
    for (std::size_t k = 0; k < re.cols(); ++k) out(i, k) = {re(i, k), im(i, k)};
  return out;
}

ComplexVector read_complex_vector(const json& j) {
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size()) throw Error(ErrorCode::ParseError, "re/im lengths differ");
  ComplexVector out(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
  return out;
}

}  // namespace

std::string to_json(const Report& r) {
  json doc;
  doc["tool"] = json{{"name", "qae"}, {"version", r.tool_version}};
  doc["command"] = r.command;
  json inputs = json::array();
  for (const auto& in : r.inputs) {
    inputs.push_back(json{{"name", in.name}, {"path", in.path}, {"sha256", in.sha256}});
  }
  doc["inputs"] = inputs;

  if (r.overlaps) {
    const auto& o = *r.overlaps;
    json shot = nullptr;
    if (o.shot_meta) shot = json{{"shots", o.shot_meta->shots}, {"seed", o.shot_meta->seed}};
    doc["overlaps"] = json{{"m", o.size()},
                           {"D", complex_matrix(o.D)},
                           {"E", complex_matrix(o.E)},
                           {"shot_meta", shot}};
  } else {
    doc["overlaps"] = nullptr;
  }

  if (r.solution) {
    const auto& s = *r.solution;
    doc["solution"] = json{
        {"energy", s.energy},
        {"lambda", s.lambda},
        {"alpha", complex_vector(s.alpha)},
        {"realified", s.realified},
        {"real_alpha", s.real.alpha},
        {"kkt",
         json{{"stationarity", s.real.kkt_stationarity},
              {"feasibility", s.real.kkt_feasibility},
              {"multiplier_gap", s.real.multiplier_gap}}},
        {"second_order_ok", s.real.second_order_ok},
        {"global_certificate", s.real.global_certificate},
        {"degenerate", s.real.degenerate},
        {"rank", s.real.rank},
    };
  } else {
    doc["solution"] = nullptr;
  }

  if (r.bounds) {
    const auto& b = *r.bounds;
    doc["bounds"] = json{
        {"dual_bound", b.dual_bound},
        {"dual_multiplier_plus_convention", -b.dual_bound},
        {"sdp_bound", b.sdp_bound},
        {"sdp_converged", b.sdp_converged},
        {"primal_energy", b.primal_energy},
        {"rounded_alpha", b.rounded_alpha},
        {"rounded_energy", b.rounded_energy},
        {"dual_iterations", b.dual_iterations},
        {"sdp_iterations", b.sdp_iterations},
    };
  } else {
    doc["bounds"] = nullptr;
  }

  doc["oracle_energy"] = r.oracle_energy ? json(*r.oracle_energy) : json(nullptr);
  if (r.timings) {
    doc["timings_ms"] = json{{"overlaps", r.timings->overlaps_ms},
                             {"solve", r.timings->solve_ms},
                             {"bounds", r.timings->bounds_ms}};
  } else {
    doc["timings_ms"] = nullptr;
  }
  doc["diagnostics"] = r.diagnostics;
  return doc.dump(2) + "\n";
}

Report parse_report(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("report is not valid JSON: ") + e.what());
  }
  try {
    Report r;
    r.tool_version = doc.at("tool").at("version").get<std::string>();
    r.command = doc.at("command").get<std::string>();
    for (const auto& in : doc.at("inputs")) {
      r.inputs.push_back({in.at("name").get<std::string>(), in.at("path").get<std::string>(),
                          in.at("sha256").get<std::string>()});
    }
    if (const auto& o = doc.at("overlaps"); !o.is_null()) {
      OverlapPair pair{read_complex_matrix(o.at("D")), read_complex_matrix(o.at("E")),
                       std::nullopt};
      if (const auto& s = o.at("shot_meta"); !s.is_null()) {
        pair.shot_meta = ShotMeta{s.at("shots").get<std::uint64_t>(),
                                  s.at("seed").get<std::uint64_t>()};
      }
      r.overlaps = std::move(pair);
    }
    if (const auto& s = doc.at("solution"); !s.is_null()) {
      HermitianSolution sol;
      sol.energy = s.at("energy").get<double>();
      sol.lambda = s.at("lambda").get<double>();
      sol.alpha = read_complex_vector(s.at("alpha"));
      sol.realified = s.at("realified").get<bool>();
      sol.real.alpha = s.at("real_alpha").get<RealVector>();
      sol.real.energy = sol.energy;
      sol.real.lambda = sol.lambda;
      sol.real.kkt_stationarity = s.at("kkt").at("stationarity").get<double>();
      sol.real.kkt_feasibility = s.at("kkt").at("feasibility").get<double>();
      sol.real.multiplier_gap = s.at("kkt").at("multiplier_gap").get<double>();
      sol.real.second_order_ok = s.at("second_order_ok").get<bool>();
      sol.real.global_certificate = s.at("global_certificate").get<bool>();
      sol.real.degenerate = s.at("degenerate").get<bool>();
      sol.real.rank = s.at("rank").get<std::size_t>();
      r.solution = std::move(sol);
    }
    if (const auto& b = doc.at("bounds"); !b.is_null()) {
      BoundReport br;
      br.dual_bound = b.at("dual_bound").get<double>();
      br.sdp_bound = b.at("sdp_bound").get<double>();
      br.sdp_converged = b.at("sdp_converged").get<bool>();
      br.primal_energy = b.at("primal_energy").get<double>();
      br.rounded_alpha = b.at("rounded_alpha").get<RealVector>();
      br.rounded_energy = b.at("rounded_energy").get<double>();
      br.dual_iterations = b.at("dual_iterations").get<int>();
      br.sdp_iterations = b.at("sdp_iterations").get<int>();
      r.bounds = std::move(br);
    }
    if (const auto& o = doc.at("oracle_energy"); !o.is_null()) r.oracle_energy = o.get<double>();
    if (const auto& t = doc.at("timings_ms"); !t.is_null()) {
      r.timings = StageTimings{t.at("overlaps").get<double>(), t.at("solve").get<double>(),
                               t.at("bounds").get<double>()};
    }
    r.diagnostics = doc.at("diagnostics").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

RandomInstance random_instance(std::size_t m, std::size_t num_qubits, std::uint64_t seed,
                               std::size_t n_terms, std::size_t gates_per_state) {
  if (m == 0 || num_qubits == 0) {
    throw Error(ErrorCode::ShapeMismatch, "random instance needs m >= 1 and N >= 1");
  }
  if (n_terms == 0) n_terms = 2 * num_qubits + 2;
  if (gates_per_state == 0) gates_per_state = 4 * num_qubits + 2;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<std::size_t> qubit(0, num_qubits - 1);

  std::vector<PauliTerm> terms;
  std::uniform_int_distribution<int> label(0, 3);
  for (std::size_t t = 0; t < n_terms; ++t) {
    std::vector<PauliOp> ops(num_qubits);
    for (auto& op : ops) op = static_cast<PauliOp>(label(rng));
    terms.push_back({normal(rng), PauliString(std::move(ops))});
  }

  const int kinds = num_qubits >= 2 ? 13 : 11;
  std::uniform_int_distribution<int> kind_draw(0, kinds - 1);
  std::vector<Circuit> circuits;
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Gate> gates;
    for (std::size_t g = 0; g < gates_per_state; ++g) {
      const auto kind = static_cast<GateKind>(kind_draw(rng));
      if (is_two_qubit(kind)) {
        const auto a = qubit(rng);
        auto b = qubit(rng);
        while (b == a) b = qubit(rng);
        gates.push_back(Gate::two(kind, a, b));
      } else if (is_rotation(kind)) {
        const auto q = qubit(rng);
        gates.push_back(Gate::rotation(kind, q, angle(rng)));
      } else {
        gates.push_back(Gate::single(kind, qubit(rng)));
      }
    }
    circuits.emplace_back(num_qubits, std::move(gates));
  }
  return {Hamiltonian(num_qubits, std::move(terms)), AnsatzSet(std::move(circuits))};
}

}  // namespace qae
