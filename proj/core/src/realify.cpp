#include "qae/realify.hpp"

#include <cmath>

#include "qae/errors.hpp"

namespace qae {

RealMatrix realify_hermitian(const ComplexMatrix& input) {
  if (!input.square()) throw Error(ErrorCode::ShapeMismatch, "realify needs a square matrix");
  if (anti_hermiticity(input) >= 1e-8) {
    throw Error(ErrorCode::NotSymmetric, "matrix is not Hermitian");
  }
  const ComplexMatrix m = hermitize(input);
  const std::size_t n = m.rows();
  RealMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = m(i, j).real();
      const double im = m(i, j).imag();
      out(i, j) = re;
      out(i, n + j) = -im;
      out(n + i, j) = im;
      out(n + i, n + j) = re;
    }
  }
  return out;
}

RealifiedProblem realify(const ComplexMatrix& d, const ComplexMatrix& e) {
  if (d.rows() != e.rows() || d.cols() != e.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "D and E differ in shape");
  }
  return {realify_hermitian(d), realify_hermitian(e), d.rows()};
}

RealVector lift_vector(std::span<const cplx> alpha) {
  const std::size_t n = alpha.size();
  RealVector out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = alpha[i].real();
    out[n + i] = alpha[i].imag();
  }
  return out;
}

ComplexVector project_solution(std::span<const double> v) {
  if (v.size() % 2 != 0) {
    throw Error(ErrorCode::ShapeMismatch, "realified vector has odd length");
  }
  const std::size_t n = v.size() / 2;
  ComplexVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {v[i], v[n + i]};
  return out;
}

void canonicalize_phase(std::span<cplx> alpha) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    if (std::abs(alpha[i]) > std::abs(alpha[best])) best = i;
  }
  if (alpha.empty() || std::abs(alpha[best]) == 0.0) return;
  const cplx phase = std::conj(alpha[best]) / std::abs(alpha[best]);
  for (auto& a : alpha) a *= phase;
  alpha[best] = std::abs(alpha[best]);
}

bool has_imaginary_part(const ComplexMatrix& m) {
  const double scale = max_abs(m);
  for (const auto& v : m.data()) {
    if (std::abs(v.imag()) > 1e-15 * scale) return true;
  }
  return false;
}

HermitianSolution solve_hermitian_p1(const ComplexMatrix& d, const ComplexMatrix& e,
                                     const SolveOptions& opts) {
  if (!d.square() || d.rows() != e.rows() || !e.square()) {
    throw Error(ErrorCode::ShapeMismatch, "D and E must be square matrices of equal size");
  }
  HermitianSolution out;
  out.realified = has_imaginary_part(d) || has_imaginary_part(e);
  if (out.realified) {
    const auto problem = realify(d, e);
    out.real = solve_p1(problem.D, problem.E, opts);
    out.alpha = project_solution(out.real.alpha);
    canonicalize_phase(out.alpha);
  } else {
    if (anti_hermiticity(d) >= 1e-8 || anti_hermiticity(e) >= 1e-8) {
      throw Error(ErrorCode::NotSymmetric, "D or E is not Hermitian");
    }
    out.real = solve_p1(real_part(d), real_part(e), opts);
    out.alpha.assign(out.real.alpha.begin(), out.real.alpha.end());
  }
  out.energy = out.real.energy;
  out.lambda = out.real.lambda;
  return out;
}

}  // namespace qae
