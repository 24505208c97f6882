#pragma once

// Ansatz state preparation: each state is V_j|0...0> for a short gate list.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qae/state.hpp"

namespace qae {

enum class GateKind { H, X, Y, Z, S, SDG, T, TDG, RX, RY, RZ, CNOT, CZ };

std::string_view to_string(GateKind kind) noexcept;
std::optional<GateKind> gate_kind_from_string(std::string_view name) noexcept;
bool is_rotation(GateKind kind) noexcept;
bool is_two_qubit(GateKind kind) noexcept;

struct Gate {
  GateKind kind = GateKind::H;
  /// targets[0] is the control for CNOT. targets[1] is unused for
  /// single-qubit kinds.
  std::array<std::size_t, 2> targets{};
  /// Radians; meaningful only for RX/RY/RZ.
  double angle = 0.0;

  static Gate single(GateKind kind, std::size_t q);
  static Gate rotation(GateKind kind, std::size_t q, double angle);
  static Gate two(GateKind kind, std::size_t q0, std::size_t q1);

  std::size_t arity() const noexcept { return is_two_qubit(kind) ? 2 : 1; }
};

class Circuit {
 public:
  /// Throws ShapeMismatch when a gate index is out of range or a two-qubit
  /// gate repeats its qubit.
  Circuit(std::size_t num_qubits, std::vector<Gate> gates = {});

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

inline constexpr std::size_t kMaxSimulatedQubits = 20;

/// V|0...0>. Throws SizeExceeded beyond 20 qubits.
StateVector prepare_state(const Circuit& circuit);

/// Applies one gate in place.
void apply_gate(const Gate& gate, StateVector& state);

class AnsatzSet {
 public:
  /// Throws ShapeMismatch for an empty set or circuits with different N.
  explicit AnsatzSet(std::vector<Circuit> circuits);

  std::size_t size() const noexcept { return circuits_.size(); }
  std::size_t num_qubits() const noexcept { return circuits_.front().num_qubits(); }
  const std::vector<Circuit>& circuits() const noexcept { return circuits_; }

  std::vector<StateVector> prepare_states() const;

 private:
  std::vector<Circuit> circuits_;
};

/// Warnings for pairs j != k with |1 - <phi_j|phi_k>| <= 1e-10. The states are
/// assumed distinct but a violation is not fatal.
std::vector<std::string> distinctness_diagnostics(const std::vector<StateVector>& states,
                                                  double tol = 1e-10);

/// Ansatz text format. States are separated by lines holding `---`; one gate
/// per line as `KIND q [q2] [angle]`. An optional leading `qubits N` line fixes
/// N; otherwise `num_qubits` is used, and failing that the largest index + 1.
/// `#` comments and blank lines are ignored; an empty block is |0...0>.
AnsatzSet parse_ansatz(std::string_view text,
                       std::optional<std::size_t> num_qubits = std::nullopt);

std::string to_text(const AnsatzSet& ansatz);

/// The three-state H2 Ansatz {|1,1>, |+,->, |-,+>}.
AnsatzSet h2_ansatz();

}  // namespace qae
