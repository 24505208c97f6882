#include "qae/relax.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qae/errors.hpp"
#include "qae/text_util.hpp"

namespace qae {

namespace {

void require_pair(const RealMatrix& d, const RealMatrix& e) {
  if (!d.square() || !e.square() || d.rows() != e.rows() || d.rows() == 0) {
    throw Error(ErrorCode::ShapeMismatch, "D and E must be square matrices of equal size");
  }
  if (asymmetry(d) > 1e-8 || asymmetry(e) > 1e-8) {
    throw Error(ErrorCode::NotSymmetric, "D and E must be symmetric");
  }
}

// Rows of `basis`^T M `basis`.
RealMatrix congruence(const RealMatrix& basis, const RealMatrix& m) {
  return symmetrize(transpose(basis) * m * basis);
}

double frobenius_inner(const RealMatrix& a, const RealMatrix& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) acc += a.data()[i] * b.data()[i];
  return acc;
}

RealMatrix from_spectrum(const RealMatrix& vectors, std::span<const double> values) {
  const std::size_t n = vectors.rows();
  RealMatrix out(n, n);
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (values[c] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const double vi = vectors(i, c) * values[c];
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * vectors(j, c);
    }
  }
  return out;
}

// Dykstra between the nonnegative orthant and {sum = 1}, acting on a
// spectrum. Both sets are spectral, so this is the spectraplex projection.
RealVector dykstra_simplex(RealVector x, int max_iterations) {
  const std::size_t n = x.size();
  RealVector p(n, 0.0);
  RealVector q(n, 0.0);
  RealVector y(n);
  for (int it = 0; it < max_iterations; ++it) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += x[i] + p[i];
    const double shift = (1.0 - sum) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = x[i] + p[i] + shift;
      p[i] = x[i] + p[i] - y[i];
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = std::max(0.0, y[i] + q[i]);
      q[i] = y[i] + q[i] - next;
      change = std::max(change, std::abs(next - x[i]));
      x[i] = next;
    }
    if (change <= 1e-16) break;
  }
  // Land exactly on the trace slice; x is already nonnegative.
  double sum = 0.0;
  for (double v : x) sum += v;
  if (sum > 0.0) {
    for (auto& v : x) v /= sum;
  } else {
    std::fill(x.begin(), x.end(), 1.0 / static_cast<double>(n));
  }
  return x;
}

}  // namespace

DualBound dual_bound(const RealMatrix& d_in, const RealMatrix& e_in, const DualOptions& opts) {
  require_pair(d_in, e_in);
  const RealMatrix d = symmetrize(d_in);
  const RealMatrix e = symmetrize(e_in);
  const auto wh = whiten_constraint(e, opts.solve);

  DualBound out;
  RealMatrix dw = d;
  RealMatrix ew = e;
  double lam_min = wh.min_eigenvalue;
  if (wh.rank() < d.rows() || !(wh.min_eigenvalue > 1e-10)) {
    // Restrict to the span of E where the constraint is meaningful.
    dw = congruence(wh.eigvecs, d);
    ew = RealMatrix(wh.rank(), wh.rank());
    for (std::size_t i = 0; i < wh.rank(); ++i) ew(i, i) = wh.eigvals[i];
    lam_min = wh.eigvals.front();
  }
  if (lam_min < opts.whiten_below_condition * wh.max_eigenvalue) {
    RealMatrix scale(wh.rank(), wh.rank());
    for (std::size_t i = 0; i < wh.rank(); ++i) scale(i, i) = 1.0 / std::sqrt(wh.eigvals[i]);
    dw = congruence(scale, congruence(wh.eigvecs, d));
    ew = RealMatrix::identity(wh.rank());
    lam_min = 1.0;
    out.whitened = true;
  }

  const std::size_t r = dw.rows();
  const double dmax = max_abs(dw);
  out.radius = static_cast<double>(r) * dmax / lam_min;
  if (out.radius == 0.0) return out;  // D vanishes on the span: bound is 0.

  const double slack = 1e-12 * dmax;
  auto feasible = [&](double mu) {
    return smallest_eigenvalue(dw - mu * ew, opts.solve.max_sweeps) >= -slack;
  };

  double lo = -out.radius;
  double hi = out.radius;
  if (!feasible(lo)) {
    throw Error(ErrorCode::BracketFailure,
                "D + R E is not PSD; E is not positive definite on the working span");
  }
  if (feasible(hi)) {
    out.bound = hi;
    return out;
  }
  // Invariant: feasible(lo) && !feasible(hi).
  while (hi - lo >= opts.tol && out.iterations < opts.max_iterations) {
    ++out.iterations;
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.bound = lo;
  return out;
}

RealMatrix project_spectraplex(const RealMatrix& z, int max_iterations) {
  const auto eig = jacobi_eigen(z);
  const auto x = dykstra_simplex(eig.values, max_iterations);
  return from_spectrum(eig.vectors, x);
}

SdpBound sdp_bound(const RealMatrix& d_in, const RealMatrix& e_in, const SdpOptions& opts) {
  require_pair(d_in, e_in);
  const auto wh = whiten_constraint(symmetrize(e_in), opts.solve);
  const RealMatrix& s = wh.basis;
  // With X = S Y S^T the slice Tr(E X) = 1 becomes Tr Y = 1 and <D, X> = <W, Y>.
  const RealMatrix w = congruence(s, symmetrize(d_in));
  const std::size_t r = w.rows();

  SdpBound out;
  RealMatrix y = (1.0 / static_cast<double>(r)) * RealMatrix::identity(r);
  const auto spectrum = jacobi_eigen(w, opts.solve.max_sweeps).values;
  const double w_norm = std::max(std::abs(spectrum.front()), std::abs(spectrum.back()));
  double objective = frobenius_inner(w, y);

  if (w_norm == 0.0) {
    out.converged = true;
  } else {
    const double step = 1.0 / w_norm;
    while (out.iterations < opts.max_iterations) {
      ++out.iterations;
      y = project_spectraplex(y - step * w, opts.dykstra_iterations);
      const double next = frobenius_inner(w, y);
      const double change = std::abs(next - objective);
      objective = next;
      if (change < opts.tol) {
        out.converged = true;
        break;
      }
    }
  }
  out.value = objective;
  out.X = s * y * transpose(s);
  return out;
}

Rounding round_feasible(const RealMatrix& x_in, const RealMatrix& d, const RealMatrix& e,
                        std::size_t samples, std::uint64_t seed) {
  require_pair(d, e);
  if (!x_in.square() || x_in.rows() != d.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "X must match D and E");
  }
  const std::size_t m = d.rows();
  const auto eig = jacobi_eigen(symmetrize(x_in));
  const double top = eig.values.back();
  if (!(top > 1e-14 * std::max(1.0, max_abs(x_in)))) {
    throw Error(ErrorCode::DegenerateRelaxation, "X is numerically zero");
  }

  // Columns of the PSD square root U diag(sqrt(max(x, 0))).
  RealMatrix root(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    const double sv = std::sqrt(std::max(0.0, eig.values[c]));
    for (std::size_t r = 0; r < m; ++r) root(r, c) = eig.vectors(r, c) * sv;
  }

  const double e_scale = std::max(1.0, max_abs(e));
  Rounding best;
  bool have = false;
  auto consider = [&](RealVector v, bool eigen_branch, long long index) {
    const double q = quadratic_form(e, v);
    if (!(q > 1e-14 * e_scale * dot(v, v))) return;
    const double inv = 1.0 / std::sqrt(q);
    for (auto& x : v) x *= inv;
    const double energy = quadratic_form(d, v);
    // Candidates within rounding of the incumbent do not displace it.
    if (!have || energy < best.energy - 1e-12 * std::max(1.0, std::abs(best.energy))) {
      best = Rounding{std::move(v), energy, eigen_branch, index};
      have = true;
    }
  };

  consider(eig.vectors.column(m - 1), true, -1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (s + 1)));
    std::normal_distribution<double> normal;
    RealVector g(m);
    for (auto& v : g) v = normal(rng);
    consider(root * std::span<const double>(g), false, static_cast<long long>(s));
  }
  if (!have) {
    throw Error(ErrorCode::DegenerateRelaxation, "no rounded candidate has positive E-norm");
  }
  canonicalize_sign(best.alpha);
  return best;
}

BoundReport compute_bounds(const RealMatrix& d, const RealMatrix& e, double primal_energy,
                           const BoundOptions& opts) {
  BoundReport out;
  out.primal_energy = primal_energy;
  const auto dual = dual_bound(d, e, opts.dual);
  out.dual_bound = dual.bound;
  out.dual_iterations = dual.iterations;
  const auto sdp = sdp_bound(d, e, opts.sdp);
  out.sdp_bound = sdp.value;
  out.sdp_converged = sdp.converged;
  out.sdp_iterations = sdp.iterations;
  const auto rounded = round_feasible(sdp.X, d, e, opts.rounding_samples, opts.rounding_seed);
  out.rounded_alpha = rounded.alpha;
  out.rounded_energy = rounded.energy;
  return out;
}

namespace {

void append_rows(std::string& out, const RealMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += text::format_double(m(i, j));
    }
    out += '\n';
  }
}

}  // namespace

std::string export_p2(const RealMatrix& d, const RealMatrix& e) {
  if (!d.square() || !e.square() || d.rows() != e.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "D and E must be square matrices of equal size");
  }
  std::string out = "QCQP m=" + std::to_string(d.rows()) + "\n";
  out += "OBJ\n";
  append_rows(out, d);
  out += "CON sign=+1 offset=-1\n";
  append_rows(out, e);
  out += "CON sign=-1 offset=1\n";
  append_rows(out, -1.0 * e);
  return out;
}

P2Document parse_p2(std::string_view input) {
  const auto lines = text::split_lines(input);
  std::size_t pos = 0;
  auto next_line = [&]() -> std::pair<std::string_view, std::size_t> {
    while (pos < lines.size()) {
      const auto line = text::trim(text::strip_comment(lines[pos++]));
      if (!line.empty()) return {line, pos};
    }
    return {{}, 0};
  };
  auto fail = [](const std::string& msg, std::size_t line) -> Error {
    return Error(ErrorCode::ParseError, msg, line);
  };

  auto [header, header_line] = next_line();
  if (header.substr(0, 7) != "QCQP m=") throw fail("expected `QCQP m=<m>`", header_line);
  const auto m_val = text::parse_int(header.substr(7));
  if (!m_val || *m_val <= 0) throw fail("bad dimension", header_line);
  const auto m = static_cast<std::size_t>(*m_val);

  auto read_matrix = [&]() {
    RealMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      auto [line, no] = next_line();
      const auto tokens = text::split_ws(line);
      if (tokens.size() != m) throw fail("expected " + std::to_string(m) + " numbers", no);
      for (std::size_t j = 0; j < m; ++j) {
        const auto v = text::parse_double(tokens[j]);
        if (!v) throw fail("bad number", no);
        out(i, j) = *v;
      }
    }
    return out;
  };

  P2Document doc;
  auto [obj, obj_line] = next_line();
  if (obj != "OBJ") throw fail("expected OBJ", obj_line);
  doc.objective = read_matrix();
  while (true) {
    auto [line, no] = next_line();
    if (line.empty()) break;
    const auto tokens = text::split_ws(line);
    if (tokens.size() != 3 || tokens[0] != "CON" || tokens[1].substr(0, 5) != "sign=" ||
        tokens[2].substr(0, 7) != "offset=") {
      throw fail("expected `CON sign=<+1|-1> offset=<c>`", no);
    }
    const auto sign = text::parse_int(tokens[1].substr(5).front() == '+'
                                          ? tokens[1].substr(6)
                                          : tokens[1].substr(5));
    const auto offset = text::parse_double(tokens[2].substr(7));
    if (!sign || (*sign != 1 && *sign != -1) || !offset) throw fail("bad CON header", no);
    doc.constraints.push_back({read_matrix(), *offset, static_cast<int>(*sign)});
  }
  return doc;
}

std::pair<RealMatrix, RealMatrix> p2_to_pair(const P2Document& doc) {
  if (doc.constraints.size() != 2 || doc.constraints[0].sign != 1 ||
      doc.constraints[1].sign != -1 || doc.constraints[0].offset != -1.0 ||
      doc.constraints[1].offset != 1.0) {
    throw Error(ErrorCode::ParseError, "expected the +E/-1 and -E/+1 constraint pair");
  }
  const auto& e = doc.constraints[0].matrix;
  const auto& neg = doc.constraints[1].matrix;
  for (std::size_t i = 0; i < e.data().size(); ++i) {
    if (e.data()[i] != -neg.data()[i]) {
      throw Error(ErrorCode::ParseError, "second constraint is not the negation of the first");
    }
  }
  return {doc.objective, e};
}

}  // namespace qae
