#pragma once

// Program P1: minimize a^T D a subject to a^T E a = 1, for real symmetric D
// and PSD E. Complex Hermitian problems reach this module through realify.
//
// The quadratic form is always the Hermitian one (a^dagger D a) for complex
// data; after realification that is a plain real quadratic form.

#include <cstddef>
#include <vector>

#include "qae/linalg.hpp"

namespace qae {

struct SolveOptions {
  /// Eigenpairs of E with value <= e_truncation_rel * max eigenvalue are
  /// dropped before whitening.
  double e_truncation_rel = 1e-10;
  double kkt_tol = 1e-8;
  double psd_tol = 1e-9;
  int max_sweeps = 100;
};

struct QcqpSolution {
  RealVector alpha;
  double lambda = 0.0;
  double energy = 0.0;
  double kkt_stationarity = 0.0;
  double kkt_feasibility = 0.0;
  double multiplier_gap = 0.0;
  bool second_order_ok = false;
  bool global_certificate = false;
  /// Smallest whitened eigenvalue tied with the next one within 1e-12.
  bool degenerate = false;
  /// Dimension of the span kept after truncating E.
  std::size_t rank = 0;
};

/// Basis of the kept span of E scaled so that basis^T E basis = I.
struct ConstraintWhitening {
  RealMatrix basis;  // m x rank, columns q_i / sqrt(lambda_i)
  RealMatrix eigvecs;  // m x rank, kept eigenvectors of E
  RealVector eigvals;  // kept eigenvalues of E, ascending
  double max_eigenvalue = 0.0;
  double min_eigenvalue = 0.0;  // over all eigenvalues, kept or not
  std::size_t rank() const noexcept { return eigvals.size(); }
};

/// Throws DegenerateConstraint if E has no positive eigenvalue.
ConstraintWhitening whiten_constraint(const RealMatrix& e, const SolveOptions& opts = {});

/// Throws ShapeMismatch, NotSymmetric (asymmetry > 1e-8) or
/// DegenerateConstraint.
QcqpSolution solve_p1(const RealMatrix& d, const RealMatrix& e, const SolveOptions& opts = {});

struct KktResiduals {
  double stationarity = 0.0;    // ||(D + lambda E) a||_2
  double feasibility = 0.0;     // |a^T E a - 1|
  double multiplier_gap = 0.0;  // |a^T D a + lambda|
};

KktResiduals kkt_residuals(const RealMatrix& d, const RealMatrix& e,
                           std::span<const double> alpha, double lambda);

/// D + lambda E: the matrix whose semidefiniteness certifies optimality.
RealMatrix certificate_matrix(const RealMatrix& d, const RealMatrix& e, double lambda);

/// Smallest eigenvalue of D + lambda E restricted to the tangent plane
/// {y : y^T E a = 0} must be >= -psd_tol. Throws DegenerateConstraint if E a
/// vanishes.
bool second_order_check(const RealMatrix& d, const RealMatrix& e,
                        std::span<const double> alpha, double lambda, double psd_tol = 1e-9);

/// lambda_min(D + lambda E) >= -psd_tol * max(1, max|D_ij|).
bool certify_global(const RealMatrix& d, const RealMatrix& e, double lambda,
                    double psd_tol = 1e-9);

/// A stationary pair (a, lambda = -mu) of P1: a generalized eigenvector on
/// the kept span, normalized to a^T E a = 1.
struct StationaryPoint {
  double energy = 0.0;
  RealVector alpha;
};

/// Every stationary point, energies ascending.
std::vector<StationaryPoint> stationary_points(const RealMatrix& d, const RealMatrix& e,
                                               const SolveOptions& opts = {});

/// Flips the sign so the largest-magnitude component (first on ties) is
/// positive.
void canonicalize_sign(std::span<double> v);

inline constexpr std::size_t kOracleMaxSize = 16;

/// Independent reference for the optimum of P1: a separately coded Jacobi
/// eigensolver (column-cyclic ordering) used to whiten E and diagonalize the
/// whitened D. Throws OracleSizeExceeded for m > 16.
double oracle_min(const RealMatrix& d, const RealMatrix& e, double e_truncation_rel = 1e-10);

}  // namespace qae
