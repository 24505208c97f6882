#include "qae/state.hpp"

#include <bit>

#include "qae/errors.hpp"

namespace qae {

StateVector::StateVector(std::size_t num_qubits)
    : num_qubits_(num_qubits), amplitudes_(std::size_t{1} << num_qubits) {
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(ComplexVector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty() || !std::has_single_bit(amplitudes_.size())) {
    throw Error(ErrorCode::ShapeMismatch,
                "state length " + std::to_string(amplitudes_.size()) +
                    " is not a power of two");
  }
  num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes_.size()));
}

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
  StateVector out(num_qubits);
  if (index >= out.dimension()) {
    throw Error(ErrorCode::ShapeMismatch, "basis index out of range");
  }
  out.amplitudes_[0] = 0.0;
  out.amplitudes_[index] = 1.0;
  return out;
}

double StateVector::norm() const { return norm2(std::span<const cplx>(amplitudes_)); }

cplx overlap(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::ShapeMismatch, "overlap of states with dimensions " +
                                              std::to_string(a.dimension()) + " and " +
                                              std::to_string(b.dimension()));
  }
  return inner(a.amplitudes(), b.amplitudes());
}

}  // namespace qae
