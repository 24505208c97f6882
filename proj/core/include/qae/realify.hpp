#pragma once

// Real embedding of complex Hermitian problems:
//   M = M_R + i M_I   ->   [[M_R, -M_I], [M_I, M_R]]
//   a = a_R + i a_I   ->   [a_R; a_I]
// which preserves a^dagger M a and positive semidefiniteness, and doubles
// every eigenvalue's multiplicity.

#include <span>

#include "qae/linalg.hpp"
#include "qae/qcqp.hpp"

namespace qae {

struct RealifiedProblem {
  RealMatrix D;
  RealMatrix E;
  std::size_t m = 0;  // complex dimension; D and E are 2m x 2m
};

/// Re-Hermitizes, then embeds. Throws ShapeMismatch for non-square input and
/// NotSymmetric when ||M - M^dagger||_max >= 1e-8.
RealMatrix realify_hermitian(const ComplexMatrix& m);
RealifiedProblem realify(const ComplexMatrix& d, const ComplexMatrix& e);

RealVector lift_vector(std::span<const cplx> alpha);
/// Throws ShapeMismatch on odd length.
ComplexVector project_solution(std::span<const double> v);

/// Rotates by a global phase so the largest-magnitude component (first on
/// ties) is real and positive.
void canonicalize_phase(std::span<cplx> alpha);

/// Solution of the complex-form P1 (minimize a^dagger D a, a^dagger E a = 1).
struct HermitianSolution {
  ComplexVector alpha;
  double energy = 0.0;
  double lambda = 0.0;
  /// True when D or E had imaginary parts and the 2m real form was solved.
  bool realified = false;
  /// The real problem actually handed to solve_p1 (m or 2m wide).
  QcqpSolution real;
};

/// Imaginary parts of magnitude <= 1e-15 * max|entry| count as absent; real
/// inputs skip realification.
bool has_imaginary_part(const ComplexMatrix& m);

HermitianSolution solve_hermitian_p1(const ComplexMatrix& d, const ComplexMatrix& e,
                                     const SolveOptions& opts = {});

}  // namespace qae
