#pragma once

// Convex lower bounds for P1 and recovery of feasible points.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qae/linalg.hpp"
#include "qae/qcqp.hpp"

namespace qae {

struct DualOptions {
  /// Bisection stops once the bracket is narrower than this.
  double tol = 1e-10;
  int max_iterations = 200;
  /// E is whitened on its kept span when lambda_min(E) / lambda_max(E)
  /// falls below this; the PSD feasibility test is then well scaled.
  double whiten_below_condition = 1e-2;
  SolveOptions solve;
};

struct DualBound {
  /// Largest mu with D - mu E >= 0 (maximize-mu form).
  double bound = 0.0;
  int iterations = 0;
  /// Half-width R of the initial bracket [-R, R].
  double radius = 0.0;
  /// Bisection ran on the whitened restriction of the pencil.
  bool whitened = false;
  /// The same optimum in the D + lambda E >= 0 convention, lambda = -mu.
  double multiplier_plus_convention() const noexcept { return -bound; }
};

/// Throws BracketFailure if D + R E is not PSD at the low end of the bracket.
DualBound dual_bound(const RealMatrix& d, const RealMatrix& e, const DualOptions& opts = {});

struct SdpOptions {
  /// Stop once successive objective values differ by less than this.
  double tol = 1e-13;
  int max_iterations = 5000;
  int dykstra_iterations = 10000;
  SolveOptions solve;
};

struct SdpBound {
  double value = 0.0;
  /// Minimizer in original coordinates, Tr(E X) = 1.
  RealMatrix X;
  int iterations = 0;
  bool converged = false;
};

/// min <D, X> s.t. Tr(E X) = 1, X >= 0. The vector block of the lifted
/// problem is fixed to zero since it does not enter the objective.
SdpBound sdp_bound(const RealMatrix& d, const RealMatrix& e, const SdpOptions& opts = {});

/// Projection of a symmetric matrix onto {Y >= 0, Tr Y = 1} by Dykstra's
/// alternating projections between the PSD cone and the trace slice.
RealMatrix project_spectraplex(const RealMatrix& z, int max_iterations = 10000);

struct Rounding {
  RealVector alpha;
  double energy = 0.0;
  bool from_eigenvector = false;
  /// Winning sample index, -1 when the eigenvector branch won.
  long long sample = -1;
};

/// Gaussian rounding: `samples` draws z ~ N(0, X) rescaled to z^T E z = 1,
/// plus the leading eigenvector of X; the lowest energy wins. Energies within
/// 1e-12 (relative) of the incumbent count as ties, which go to the earlier
/// candidate: eigenvector first, then lower sample index. Throws DegenerateRelaxation when X
/// is numerically zero.
Rounding round_feasible(const RealMatrix& x, const RealMatrix& d, const RealMatrix& e,
                        std::size_t samples, std::uint64_t seed);

struct BoundReport {
  double dual_bound = 0.0;
  double sdp_bound = 0.0;
  bool sdp_converged = false;
  double primal_energy = 0.0;
  RealVector rounded_alpha;
  double rounded_energy = 0.0;
  int dual_iterations = 0;
  int sdp_iterations = 0;
};

struct BoundOptions {
  DualOptions dual;
  SdpOptions sdp;
  std::size_t rounding_samples = 1000;
  std::uint64_t rounding_seed = 0;
};

BoundReport compute_bounds(const RealMatrix& d, const RealMatrix& e, double primal_energy,
                           const BoundOptions& opts = {});

// Inequality form of P1 for external QCQP solvers:
//
//   QCQP m=<m>
//   OBJ
//   <m rows of m numbers>
//   CON sign=+1 offset=-1
//   <m rows: E>
//   CON sign=-1 offset=1
//   <m rows: -E>
//
// Each CON block reads x^T A x + offset <= 0 with A the rows that follow;
// `sign` records A = sign * E. Numbers use shortest round-trip decimals.

struct P2Constraint {
  RealMatrix matrix;
  double offset = 0.0;
  int sign = 1;
};

struct P2Document {
  RealMatrix objective;
  std::vector<P2Constraint> constraints;
};

std::string export_p2(const RealMatrix& d, const RealMatrix& e);
/// Throws ParseError with a line number.
P2Document parse_p2(std::string_view text);
/// Recovers (D, E) from a document written by export_p2. Throws ParseError
/// if the two constraints are not the +E / -E pair.
std::pair<RealMatrix, RealMatrix> p2_to_pair(const P2Document& doc);

}  // namespace qae
