#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qae/linalg.hpp"

namespace qae {

/// 2^N complex amplitudes. Basis index bit (N-1-q) holds qubit q.
class StateVector {
 public:
  StateVector() = default;
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(std::size_t num_qubits);
  /// Throws ShapeMismatch unless the length is a power of two.
  explicit StateVector(ComplexVector amplitudes);

  static StateVector basis(std::size_t num_qubits, std::size_t index);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }

  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  std::span<cplx> amplitudes() noexcept { return amplitudes_; }
  cplx operator[](std::size_t i) const { return amplitudes_[i]; }
  cplx& operator[](std::size_t i) { return amplitudes_[i]; }

  double norm() const;

 private:
  std::size_t num_qubits_ = 0;
  ComplexVector amplitudes_;
};

/// <a|b>, conjugate-linear in `a`. Throws ShapeMismatch on unequal dimensions.
cplx overlap(const StateVector& a, const StateVector& b);

}  // namespace qae
