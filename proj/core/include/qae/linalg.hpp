#pragma once

// Small dense linear algebra used by the solver stages. Sizes here are tiny
// (m is the number of Ansatz states), so everything is row-major and
// straightforward.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qae {

using cplx = std::complex<double>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<cplx>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<T> column(std::size_t j) const;

  std::span<const T> data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<cplx>;

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(double s, const RealMatrix& a);
RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealVector operator*(const RealMatrix& a, std::span<const double> x);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, std::span<const cplx> x);

RealMatrix transpose(const RealMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix to_complex(const RealMatrix& a);
RealMatrix real_part(const ComplexMatrix& a);
RealMatrix imag_part(const ComplexMatrix& a);

double dot(std::span<const double> a, std::span<const double> b);
/// Conjugate-linear in the first argument.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm2(std::span<const double> x);
double norm2(std::span<const cplx> x);

/// x^T A x.
double quadratic_form(const RealMatrix& a, std::span<const double> x);
/// x^dagger A x (real part; exact for Hermitian A).
double quadratic_form(const ComplexMatrix& a, std::span<const cplx> x);

double max_abs(const RealMatrix& a);
double max_abs(const ComplexMatrix& a);
/// max |A_ij - A_ji|.
double asymmetry(const RealMatrix& a);
/// max |A_ij - conj(A_ji)|.
double anti_hermiticity(const ComplexMatrix& a);
RealMatrix symmetrize(const RealMatrix& a);
ComplexMatrix hermitize(const ComplexMatrix& a);

/// Eigendecomposition of a real symmetric matrix. Eigenvalues ascending,
/// eigenvectors stored as the matching columns of `vectors`. Ties keep the
/// order in which the Jacobi sweeps left them on the diagonal.
struct SymmetricEigen {
  RealVector values;
  RealMatrix vectors;
  int sweeps = 0;
  bool converged = false;
};

/// Cyclic (row-by-row) Jacobi rotations until the off-diagonal mass is
/// negligible relative to the Frobenius norm, or `max_sweeps` is hit.
SymmetricEigen jacobi_eigen(const RealMatrix& a, int max_sweeps = 100);

double smallest_eigenvalue(const RealMatrix& a, int max_sweeps = 100);

}  // namespace qae
