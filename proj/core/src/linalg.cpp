#include "qae/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qae/errors.hpp"

namespace qae {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = T{1};
  return out;
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

template class Matrix<double>;
template class Matrix<cplx>;

namespace {

template <class M>
void require_same_shape(const M& a, const M& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "matrix shapes differ");
  }
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "inner dimensions differ");
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <class T>
std::vector<T> matvec(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorCode::ShapeMismatch, "vector length differs from cols");
  }
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
  require_same_shape(a, b);
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
  require_same_shape(a, b);
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

RealMatrix operator*(double s, const RealMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  return matmul(a, b);
}
RealVector operator*(const RealMatrix& a, std::span<const double> x) {
  return matvec(a, x);
}
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}
ComplexVector operator*(const ComplexMatrix& a, std::span<const cplx> x) {
  return matvec(a, x);
}

RealMatrix transpose(const RealMatrix& a) {
  RealMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix to_complex(const RealMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

RealMatrix real_part(const ComplexMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).real();
  return out;
}

RealMatrix imag_part(const ComplexMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).imag();
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::ShapeMismatch, "dot of unequal lengths");
  }
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::ShapeMismatch, "inner product of unequal lengths");
  }
  cplx acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double norm2(std::span<const cplx> x) {
  double acc = 0.0;
  for (const auto& v : x) acc += std::norm(v);
  return std::sqrt(acc);
}

double quadratic_form(const RealMatrix& a, std::span<const double> x) {
  return dot(x, a * x);
}

double quadratic_form(const ComplexMatrix& a, std::span<const cplx> x) {
  return inner(x, a * x).real();
}

double max_abs(const RealMatrix& a) {
  double out = 0.0;
  for (double v : a.data()) out = std::max(out, std::abs(v));
  return out;
}

double max_abs(const ComplexMatrix& a) {
  double out = 0.0;
  for (const auto& v : a.data()) out = std::max(out, std::abs(v));
  return out;
}

double asymmetry(const RealMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "matrix not square");
  double out = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      out = std::max(out, std::abs(a(i, j) - a(j, i)));
  return out;
}

double anti_hermiticity(const ComplexMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "matrix not square");
  double out = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      out = std::max(out, std::abs(a(i, j) - std::conj(a(j, i))));
  return out;
}

RealMatrix symmetrize(const RealMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "matrix not square");
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = 0.5 * (a(i, j) + a(j, i));
  return out;
}

ComplexMatrix hermitize(const ComplexMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::ShapeMismatch, "matrix not square");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return out;
}

SymmetricEigen jacobi_eigen(const RealMatrix& input, int max_sweeps) {
  if (!input.square()) {
    throw Error(ErrorCode::ShapeMismatch, "eigensolver needs a square matrix");
  }
  const std::size_t n = input.rows();
  RealMatrix a = symmetrize(input);
  RealMatrix v = RealMatrix::identity(n);

  double frob = 0.0;
  for (double x : a.data()) frob += x * x;
  const double threshold =
      std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon() * frob;

  SymmetricEigen out;
  auto off_diagonal = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a(p, q) * a(p, q);
    return s;
  };

  out.converged = off_diagonal() <= threshold;
  while (!out.converged && out.sweeps < max_sweeps) {
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle chosen to annihilate a(p,q); the smaller root keeps
        // the rotation stable.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    out.converged = off_diagonal() <= threshold;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  out.values.resize(n);
  out.vectors = RealMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

double smallest_eigenvalue(const RealMatrix& a, int max_sweeps) {
  if (a.rows() == 0) return 0.0;
  return jacobi_eigen(a, max_sweeps).values.front();
}

}  // namespace qae
