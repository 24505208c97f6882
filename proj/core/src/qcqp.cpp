#include "qae/qcqp.hpp"

#include <algorithm>
#include <cmath>

#include "qae/errors.hpp"

namespace qae {

namespace {

void require_pair(const RealMatrix& d, const RealMatrix& e) {
  if (!d.square() || !e.square() || d.rows() != e.rows() || d.rows() == 0) {
    throw Error(ErrorCode::ShapeMismatch, "D and E must be square matrices of equal size");
  }
}

void require_symmetric(const RealMatrix& a, const char* name) {
  if (asymmetry(a) > 1e-8) {
    throw Error(ErrorCode::NotSymmetric, std::string(name) + " is not symmetric");
  }
}

// Orthonormal basis of the hyperplane orthogonal to unit vector u.
RealMatrix tangent_basis(std::span<const double> u) {
  const std::size_t m = u.size();
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  // Coordinate axes least aligned with u go first.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(u[a]) < std::abs(u[b]);
  });

  std::vector<RealVector> basis{RealVector(u.begin(), u.end())};
  for (std::size_t idx : order) {
    if (basis.size() == m) break;
    RealVector v(m, 0.0);
    v[idx] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const double c = dot(b, v);
        for (std::size_t i = 0; i < m; ++i) v[i] -= c * b[i];
      }
    }
    const double len = norm2(v);
    if (len < 1e-8) continue;
    for (auto& x : v) x /= len;
    basis.push_back(std::move(v));
  }

  RealMatrix out(m, basis.size() - 1);
  for (std::size_t c = 1; c < basis.size(); ++c)
    for (std::size_t r = 0; r < m; ++r) out(r, c - 1) = basis[c][r];
  return out;
}

}  // namespace

void canonicalize_sign(std::span<double> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  if (!v.empty() && v[best] < 0.0) {
    for (auto& x : v) x = -x;
  }
}

ConstraintWhitening whiten_constraint(const RealMatrix& e, const SolveOptions& opts) {
  const auto eig = jacobi_eigen(e, opts.max_sweeps);
  ConstraintWhitening out;
  out.min_eigenvalue = eig.values.front();
  out.max_eigenvalue = eig.values.back();
  if (!(out.max_eigenvalue > 0.0) || max_abs(e) == 0.0) {
    throw Error(ErrorCode::DegenerateConstraint, "E has no positive eigenvalue");
  }
  const double cutoff = opts.e_truncation_rel * out.max_eigenvalue;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    if (eig.values[i] > cutoff) kept.push_back(i);
  }
  const std::size_t m = e.rows();
  out.basis = RealMatrix(m, kept.size());
  out.eigvecs = RealMatrix(m, kept.size());
  out.eigvals.reserve(kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const double lam = eig.values[kept[c]];
    out.eigvals.push_back(lam);
    const double scale = 1.0 / std::sqrt(lam);
    for (std::size_t r = 0; r < m; ++r) {
      out.eigvecs(r, c) = eig.vectors(r, kept[c]);
      out.basis(r, c) = eig.vectors(r, kept[c]) * scale;
    }
  }
  return out;
}

namespace {

struct WhitenedProblem {
  ConstraintWhitening whitening;
  SymmetricEigen spectrum;  // of basis^T D basis
};

WhitenedProblem whitened_spectrum(const RealMatrix& d, const RealMatrix& e,
                                  const SolveOptions& opts) {
  require_pair(d, e);
  require_symmetric(d, "D");
  require_symmetric(e, "E");
  WhitenedProblem out{whiten_constraint(symmetrize(e), opts), {}};
  const auto& s = out.whitening.basis;
  const RealMatrix w = symmetrize(transpose(s) * symmetrize(d) * s);
  out.spectrum = jacobi_eigen(w, opts.max_sweeps);
  return out;
}

RealVector lift_from_whitened(const WhitenedProblem& p, std::size_t column,
                              const RealMatrix& e) {
  const auto w = p.spectrum.vectors.column(column);
  RealVector alpha = p.whitening.basis * std::span<const double>(w);
  const double scale = quadratic_form(e, alpha);
  for (auto& x : alpha) x /= std::sqrt(scale);
  canonicalize_sign(alpha);
  return alpha;
}

}  // namespace

QcqpSolution solve_p1(const RealMatrix& d_in, const RealMatrix& e_in, const SolveOptions& opts) {
  const auto problem = whitened_spectrum(d_in, e_in, opts);
  const RealMatrix d = symmetrize(d_in);
  const RealMatrix e = symmetrize(e_in);

  QcqpSolution sol;
  sol.rank = problem.whitening.rank();
  sol.energy = problem.spectrum.values.front();
  sol.lambda = -sol.energy;
  sol.alpha = lift_from_whitened(problem, 0, e);
  sol.degenerate = sol.rank > 1 &&
                   problem.spectrum.values[1] - problem.spectrum.values[0] <= 1e-12;

  const auto kkt = kkt_residuals(d, e, sol.alpha, sol.lambda);
  sol.kkt_stationarity = kkt.stationarity;
  sol.kkt_feasibility = kkt.feasibility;
  sol.multiplier_gap = kkt.multiplier_gap;
  sol.second_order_ok = second_order_check(d, e, sol.alpha, sol.lambda, opts.psd_tol);
  sol.global_certificate = certify_global(d, e, sol.lambda, opts.psd_tol);
  return sol;
}

KktResiduals kkt_residuals(const RealMatrix& d, const RealMatrix& e,
                           std::span<const double> alpha, double lambda) {
  require_pair(d, e);
  if (alpha.size() != d.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "alpha length differs from matrix size");
  }
  const auto grad = certificate_matrix(d, e, lambda) * alpha;
  return {norm2(grad), std::abs(quadratic_form(e, alpha) - 1.0),
          std::abs(quadratic_form(d, alpha) + lambda)};
}

RealMatrix certificate_matrix(const RealMatrix& d, const RealMatrix& e, double lambda) {
  require_pair(d, e);
  return d + lambda * e;
}

bool second_order_check(const RealMatrix& d, const RealMatrix& e,
                        std::span<const double> alpha, double lambda, double psd_tol) {
  require_pair(d, e);
  if (alpha.size() != d.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "alpha length differs from matrix size");
  }
  RealVector normal = e * alpha;
  const double len = norm2(normal);
  if (!(len > 1e-14)) {
    throw Error(ErrorCode::DegenerateConstraint, "E alpha vanishes; no tangent plane");
  }
  for (auto& x : normal) x /= len;
  const RealMatrix b = tangent_basis(normal);
  if (b.cols() == 0) return true;
  const RealMatrix reduced = transpose(b) * certificate_matrix(d, e, lambda) * b;
  return smallest_eigenvalue(reduced) >= -psd_tol;
}

bool certify_global(const RealMatrix& d, const RealMatrix& e, double lambda, double psd_tol) {
  require_pair(d, e);
  const double scale = std::max(1.0, max_abs(d));
  return smallest_eigenvalue(certificate_matrix(d, e, lambda)) >= -psd_tol * scale;
}

std::vector<StationaryPoint> stationary_points(const RealMatrix& d, const RealMatrix& e,
                                               const SolveOptions& opts) {
  const auto problem = whitened_spectrum(d, e, opts);
  const RealMatrix es = symmetrize(e);
  std::vector<StationaryPoint> out;
  out.reserve(problem.whitening.rank());
  for (std::size_t c = 0; c < problem.whitening.rank(); ++c) {
    out.push_back({problem.spectrum.values[c], lift_from_whitened(problem, c, es)});
  }
  return out;
}

}  // namespace qae
