#pragma once

// Hamiltonians as weighted sums of Pauli strings.
//
// Qubit ordering: the leftmost label of a string acts on qubit 0, which is the
// most significant bit of a basis-state index. "XZ" applied to |b0 b1> flips
// b0 and signs on b1.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qae/linalg.hpp"
#include "qae/state.hpp"

namespace qae {

enum class PauliOp : std::uint8_t { I, X, Y, Z };

char to_char(PauliOp op) noexcept;

class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<PauliOp> ops);
  /// Throws ParseError on anything outside {I,X,Y,Z}.
  static PauliString parse(std::string_view labels);

  std::size_t num_qubits() const noexcept { return ops_.size(); }
  const std::vector<PauliOp>& ops() const noexcept { return ops_; }
  std::string str() const;

  /// Basis-index masks: bits flipped (X or Y) and bits carrying a sign (Y or Z).
  std::uint64_t flip_mask() const noexcept { return flip_mask_; }
  std::uint64_t phase_mask() const noexcept { return phase_mask_; }
  unsigned y_count() const noexcept { return y_count_; }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.ops_ == b.ops_;
  }
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    return a.str() <=> b.str();
  }

 private:
  std::vector<PauliOp> ops_;
  std::uint64_t flip_mask_ = 0;
  std::uint64_t phase_mask_ = 0;
  unsigned y_count_ = 0;
};

struct PauliTerm {
  cplx coefficient;
  PauliString string;
};

class Hamiltonian {
 public:
  /// Merges duplicate strings and sorts terms by label. Throws
  /// EmptyHamiltonian for no terms and ShapeMismatch for inconsistent
  /// string lengths.
  Hamiltonian(std::size_t num_qubits, std::vector<PauliTerm> terms);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Pauli strings are Hermitian, so H is Hermitian iff every coefficient is
  /// real (up to `tol`).
  bool is_hermitian(double tol = 0.0) const noexcept;
  /// Sum of |coefficient|.
  double one_norm() const noexcept;

 private:
  std::size_t num_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Text format: one term per line, `<re> <im> <LABELS>`; `#` starts a comment
/// and blank lines are ignored. The qubit count is the first label's length.
Hamiltonian parse_hamiltonian(std::string_view text);

/// Canonical text form; parse_hamiltonian(to_text(h)) reproduces h exactly.
std::string to_text(const Hamiltonian& h);

/// U|psi> by bit manipulation. Throws ShapeMismatch if the state does not
/// have 2^N amplitudes.
StateVector apply_pauli(const PauliString& string, const StateVector& state);

/// H|psi> accumulated term by term in term order.
StateVector apply_hamiltonian(const Hamiltonian& h, const StateVector& state);

inline constexpr std::size_t kDenseOracleMaxQubits = 10;

/// Dense 2^N x 2^N matrix of sum beta_i U_i. Throws OracleSizeExceeded for
/// N > 10.
ComplexMatrix dense_matrix(const Hamiltonian& h);

/// The two-qubit H2 model a(ZI + IZ) + b XX with a = 0.4, b = 0.2.
Hamiltonian h2_hamiltonian(double a = 0.4, double b = 0.2);

}  // namespace qae
