// Reference optimum for P1. Shares no numerical code with solve_p1: it has
// its own Jacobi kernel on flat column-major storage, visiting pivots column
// by column and computing rotations from atan2.

#include <algorithm>
#include <cmath>
#include <vector>

#include "qae/errors.hpp"
#include "qae/qcqp.hpp"

namespace qae {

namespace {

struct Flat {
  std::size_t n;
  std::vector<double> v;  // column-major
  double& at(std::size_t i, std::size_t j) { return v[j * n + i]; }
  double at(std::size_t i, std::size_t j) const { return v[j * n + i]; }
};

// Diagonalizes `a` in place; returns the accumulated rotations (columns are
// eigenvectors matching the final diagonal).
Flat column_cyclic_jacobi(Flat& a) {
  const std::size_t n = a.n;
  Flat q{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) q.at(i, i) = 1.0;

  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        total += a.at(i, j) * a.at(i, j);
        if (i != j) off += a.at(i, j) * a.at(i, j);
      }
    if (off <= 1e-32 * total || off == 0.0) break;

    for (std::size_t col = 1; col < n; ++col) {
      for (std::size_t row = 0; row < col; ++row) {
        const double apq = a.at(row, col);
        if (apq == 0.0) continue;
        const double phi = 0.5 * std::atan2(2.0 * apq, a.at(col, col) - a.at(row, row));
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        // A <- J^T A J with J acting on (row, col).
        for (std::size_t k = 0; k < n; ++k) {
          const double x = a.at(k, row);
          const double y = a.at(k, col);
          a.at(k, row) = c * x - s * y;
          a.at(k, col) = s * x + c * y;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double x = a.at(row, k);
          const double y = a.at(col, k);
          a.at(row, k) = c * x - s * y;
          a.at(col, k) = s * x + c * y;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double x = q.at(k, row);
          const double y = q.at(k, col);
          q.at(k, row) = c * x - s * y;
          q.at(k, col) = s * x + c * y;
        }
      }
    }
  }
  return q;
}

}  // namespace

double oracle_min(const RealMatrix& d, const RealMatrix& e, double e_truncation_rel) {
  const std::size_t m = d.rows();
  if (!d.square() || !e.square() || e.rows() != m || m == 0) {
    throw Error(ErrorCode::ShapeMismatch, "oracle needs square D and E of equal size");
  }
  if (m > kOracleMaxSize) {
    throw Error(ErrorCode::OracleSizeExceeded,
                "oracle limited to m <= " + std::to_string(kOracleMaxSize));
  }

  Flat ef{m, std::vector<double>(m * m)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ef.at(i, j) = 0.5 * (e(i, j) + e(j, i));
  const Flat qe = column_cyclic_jacobi(ef);

  double top = 0.0;
  for (std::size_t i = 0; i < m; ++i) top = std::max(top, ef.at(i, i));
  if (!(top > 0.0)) throw Error(ErrorCode::DegenerateConstraint, "E has no positive eigenvalue");

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m; ++i)
    if (ef.at(i, i) > e_truncation_rel * top) kept.push_back(i);
  const std::size_t r = kept.size();

  // T = Q_kept * diag(1/sqrt(lambda)); W = T^T D T.
  Flat t{m, std::vector<double>(m * r)};  // m x r, column-major with stride m
  for (std::size_t c = 0; c < r; ++c) {
    const double s = 1.0 / std::sqrt(ef.at(kept[c], kept[c]));
    for (std::size_t k = 0; k < m; ++k) t.v[c * m + k] = qe.at(k, kept[c]) * s;
  }
  Flat w{r, std::vector<double>(r * r, 0.0)};
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      double acc = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m; ++j) row += 0.5 * (d(i, j) + d(j, i)) * t.v[b * m + j];
        acc += t.v[a * m + i] * row;
      }
      w.at(a, b) = acc;
    }
  }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      const double avg = 0.5 * (w.at(a, b) + w.at(b, a));
      w.at(a, b) = avg;
      w.at(b, a) = avg;
    }
  column_cyclic_jacobi(w);
  double best = w.at(0, 0);
  for (std::size_t i = 1; i < r; ++i) best = std::min(best, w.at(i, i));
  return best;
}

}  // namespace qae
