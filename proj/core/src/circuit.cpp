#include "qae/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qae/errors.hpp"
#include "qae/text_util.hpp"

namespace qae {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 13> kGateNames{{
    {GateKind::H, "H"},     {GateKind::X, "X"},       {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},     {GateKind::S, "S"},       {GateKind::SDG, "SDG"},
    {GateKind::T, "T"},     {GateKind::TDG, "TDG"},   {GateKind::RX, "RX"},
    {GateKind::RY, "RY"},   {GateKind::RZ, "RZ"},     {GateKind::CNOT, "CNOT"},
    {GateKind::CZ, "CZ"},
}};

using Mat2 = std::array<cplx, 4>;  // row-major [[a, b], [c, d]]

Mat2 single_qubit_matrix(const Gate& g) {
  const double r = std::numbers::sqrt2 / 2.0;
  const cplx i{0.0, 1.0};
  const double half = g.angle / 2.0;
  switch (g.kind) {
    case GateKind::H: return {r, r, r, -r};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -i, i, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::S: return {1.0, 0.0, 0.0, i};
    case GateKind::SDG: return {1.0, 0.0, 0.0, -i};
    case GateKind::T: return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
    case GateKind::TDG: return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)};
    case GateKind::RX:
      return {std::cos(half), -i * std::sin(half), -i * std::sin(half), std::cos(half)};
    case GateKind::RY:
      return {std::cos(half), -std::sin(half), std::sin(half), std::cos(half)};
    case GateKind::RZ: return {std::polar(1.0, -half), 0.0, 0.0, std::polar(1.0, half)};
    default: break;
  }
  throw Error(ErrorCode::ShapeMismatch, "not a single-qubit gate");
}

std::uint64_t bit_of(std::size_t num_qubits, std::size_t q) {
  return std::uint64_t{1} << (num_qubits - 1 - q);
}

}  // namespace

std::string_view to_string(GateKind kind) noexcept {
  for (const auto& [k, name] : kGateNames)
    if (k == kind) return name;
  return "?";
}

std::optional<GateKind> gate_kind_from_string(std::string_view name) noexcept {
  for (const auto& [k, n] : kGateNames)
    if (n == name) return k;
  return std::nullopt;
}

bool is_rotation(GateKind kind) noexcept {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

bool is_two_qubit(GateKind kind) noexcept {
  return kind == GateKind::CNOT || kind == GateKind::CZ;
}

Gate Gate::single(GateKind kind, std::size_t q) {
  if (is_rotation(kind) || is_two_qubit(kind)) {
    throw Error(ErrorCode::ShapeMismatch, std::string(to_string(kind)) + " needs more operands");
  }
  return Gate{kind, {q, 0}, 0.0};
}

Gate Gate::rotation(GateKind kind, std::size_t q, double angle) {
  if (!is_rotation(kind)) {
    throw Error(ErrorCode::ShapeMismatch, std::string(to_string(kind)) + " takes no angle");
  }
  return Gate{kind, {q, 0}, angle};
}

Gate Gate::two(GateKind kind, std::size_t q0, std::size_t q1) {
  if (!is_two_qubit(kind)) {
    throw Error(ErrorCode::ShapeMismatch, std::string(to_string(kind)) + " is single-qubit");
  }
  return Gate{kind, {q0, q1}, 0.0};
}

Circuit::Circuit(std::size_t num_qubits, std::vector<Gate> gates)
    : num_qubits_(num_qubits), gates_(std::move(gates)) {
  if (num_qubits_ == 0) throw Error(ErrorCode::ShapeMismatch, "circuit on zero qubits");
  for (const auto& g : gates_) {
    for (std::size_t t = 0; t < g.arity(); ++t) {
      if (g.targets[t] >= num_qubits_) {
        throw Error(ErrorCode::ShapeMismatch,
                    std::string(to_string(g.kind)) + " on qubit " +
                        std::to_string(g.targets[t]) + " of a " +
                        std::to_string(num_qubits_) + "-qubit circuit");
      }
    }
    if (g.arity() == 2 && g.targets[0] == g.targets[1]) {
      throw Error(ErrorCode::ShapeMismatch,
                  std::string(to_string(g.kind)) + " with repeated qubit");
    }
  }
}

void apply_gate(const Gate& g, StateVector& state) {
  const std::size_t n = state.num_qubits();
  auto amp = state.amplitudes();
  if (g.kind == GateKind::CNOT) {
    const auto control = bit_of(n, g.targets[0]);
    const auto target = bit_of(n, g.targets[1]);
    for (std::size_t x = 0; x < amp.size(); ++x) {
      if ((x & control) && !(x & target)) std::swap(amp[x], amp[x | target]);
    }
    return;
  }
  if (g.kind == GateKind::CZ) {
    const auto mask = bit_of(n, g.targets[0]) | bit_of(n, g.targets[1]);
    for (std::size_t x = 0; x < amp.size(); ++x) {
      if ((x & mask) == mask) amp[x] = -amp[x];
    }
    return;
  }
  const auto m = single_qubit_matrix(g);
  const auto bit = bit_of(n, g.targets[0]);
  for (std::size_t x = 0; x < amp.size(); ++x) {
    if (x & bit) continue;
    const cplx a0 = amp[x];
    const cplx a1 = amp[x | bit];
    amp[x] = m[0] * a0 + m[1] * a1;
    amp[x | bit] = m[2] * a0 + m[3] * a1;
  }
}

StateVector prepare_state(const Circuit& circuit) {
  if (circuit.num_qubits() > kMaxSimulatedQubits) {
    throw Error(ErrorCode::SizeExceeded,
                std::to_string(circuit.num_qubits()) + " qubits exceeds the simulator cap of " +
                    std::to_string(kMaxSimulatedQubits));
  }
  StateVector state(circuit.num_qubits());
  for (const auto& g : circuit.gates()) apply_gate(g, state);
  return state;
}

AnsatzSet::AnsatzSet(std::vector<Circuit> circuits) : circuits_(std::move(circuits)) {
  if (circuits_.empty()) throw Error(ErrorCode::ShapeMismatch, "empty Ansatz");
  for (const auto& c : circuits_) {
    if (c.num_qubits() != circuits_.front().num_qubits()) {
      throw Error(ErrorCode::ShapeMismatch, "Ansatz circuits disagree on qubit count");
    }
  }
}

std::vector<StateVector> AnsatzSet::prepare_states() const {
  std::vector<StateVector> out;
  out.reserve(circuits_.size());
  for (const auto& c : circuits_) out.push_back(prepare_state(c));
  return out;
}

std::vector<std::string> distinctness_diagnostics(const std::vector<StateVector>& states,
                                                  double tol) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < states.size(); ++j) {
    for (std::size_t k = j + 1; k < states.size(); ++k) {
      if (std::abs(1.0 - overlap(states[j], states[k])) <= tol) {
        out.push_back("Ansatz states " + std::to_string(j) + " and " + std::to_string(k) +
                      " coincide (overlap 1)");
      }
    }
  }
  return out;
}

namespace {

struct ParsedGate {
  GateKind kind;
  std::array<long long, 2> qubits{};
  double angle = 0.0;
  std::size_t line = 0;
};

}  // namespace

AnsatzSet parse_ansatz(std::string_view input, std::optional<std::size_t> num_qubits) {
  std::vector<std::vector<ParsedGate>> blocks(1);
  std::optional<std::size_t> declared;
  std::size_t line_no = 0;
  bool seen_content = false;
  for (auto raw : text::split_lines(input)) {
    ++line_no;
    const auto line = text::trim(text::strip_comment(raw));
    if (line.empty()) continue;
    if (line == "---") {
      blocks.emplace_back();
      seen_content = true;
      continue;
    }
    const auto tokens = text::split_ws(line);
    if (tokens[0] == "qubits") {
      if (seen_content || tokens.size() != 2) {
        throw Error(ErrorCode::ParseError, "`qubits N` must be the first line", line_no);
      }
      const auto n = text::parse_int(tokens[1]);
      if (!n || *n <= 0) throw Error(ErrorCode::ParseError, "bad qubit count", line_no);
      declared = static_cast<std::size_t>(*n);
      seen_content = true;
      continue;
    }
    seen_content = true;
    const auto kind = gate_kind_from_string(tokens[0]);
    if (!kind) {
      throw Error(ErrorCode::ParseError, "unknown gate `" + std::string(tokens[0]) + "`",
                  line_no);
    }
    const std::size_t arity = is_two_qubit(*kind) ? 2 : 1;
    const std::size_t expected = 1 + arity + (is_rotation(*kind) ? 1 : 0);
    if (tokens.size() != expected) {
      throw Error(ErrorCode::ParseError,
                  std::string(to_string(*kind)) + " expects " + std::to_string(expected - 1) +
                      " operands",
                  line_no);
    }
    ParsedGate pg{*kind, {}, 0.0, line_no};
    for (std::size_t t = 0; t < arity; ++t) {
      const auto q = text::parse_int(tokens[1 + t]);
      if (!q || *q < 0) throw Error(ErrorCode::ParseError, "bad qubit index", line_no);
      pg.qubits[t] = *q;
    }
    if (is_rotation(*kind)) {
      const auto angle = text::parse_double(tokens.back());
      if (!angle) throw Error(ErrorCode::ParseError, "bad angle", line_no);
      pg.angle = *angle;
    }
    blocks.back().push_back(pg);
  }

  if (declared && num_qubits && *declared != *num_qubits) {
    throw Error(ErrorCode::ShapeMismatch, "Ansatz declares " + std::to_string(*declared) +
                                              " qubits but " + std::to_string(*num_qubits) +
                                              " are required");
  }
  std::size_t n = declared ? *declared : num_qubits.value_or(0);
  if (n == 0) {
    long long max_index = 0;
    for (const auto& b : blocks)
      for (const auto& g : b)
        for (std::size_t t = 0; t < (is_two_qubit(g.kind) ? 2u : 1u); ++t)
          max_index = std::max(max_index, g.qubits[t]);
    n = static_cast<std::size_t>(max_index) + 1;
  }

  std::vector<Circuit> circuits;
  circuits.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::vector<Gate> gates;
    for (const auto& g : b) {
      Gate gate{g.kind,
                {static_cast<std::size_t>(g.qubits[0]), static_cast<std::size_t>(g.qubits[1])},
                g.angle};
      for (std::size_t t = 0; t < gate.arity(); ++t) {
        if (gate.targets[t] >= n) {
          throw Error(ErrorCode::ShapeMismatch,
                      "qubit " + std::to_string(gate.targets[t]) + " outside a " +
                          std::to_string(n) + "-qubit register",
                      g.line);
        }
      }
      if (gate.arity() == 2 && gate.targets[0] == gate.targets[1]) {
        throw Error(ErrorCode::ParseError, "two-qubit gate with repeated qubit", g.line);
      }
      gates.push_back(gate);
    }
    circuits.emplace_back(n, std::move(gates));
  }
  return AnsatzSet(std::move(circuits));
}

std::string to_text(const AnsatzSet& ansatz) {
  std::string out = "qubits " + std::to_string(ansatz.num_qubits()) + "\n";
  bool first = true;
  for (const auto& c : ansatz.circuits()) {
    if (!first) out += "---\n";
    first = false;
    for (const auto& g : c.gates()) {
      out += to_string(g.kind);
      for (std::size_t t = 0; t < g.arity(); ++t) out += " " + std::to_string(g.targets[t]);
      if (is_rotation(g.kind)) out += " " + text::format_double(g.angle);
      out += '\n';
    }
  }
  return out;
}

AnsatzSet h2_ansatz() {
  using K = GateKind;
  return AnsatzSet({
      Circuit(2, {Gate::single(K::X, 0), Gate::single(K::X, 1)}),
      Circuit(2, {Gate::single(K::H, 0), Gate::single(K::X, 1), Gate::single(K::H, 1)}),
      Circuit(2, {Gate::single(K::X, 0), Gate::single(K::H, 0), Gate::single(K::H, 1)}),
  });
}

}  // namespace qae
