#include "qae/overlaps.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "qae/errors.hpp"

namespace qae {

namespace {

void validate(const Hamiltonian& h, const std::vector<StateVector>& states) {
  if (states.empty()) throw Error(ErrorCode::ShapeMismatch, "empty Ansatz");
  for (const auto& s : states) {
    if (s.num_qubits() != h.num_qubits()) {
      throw Error(ErrorCode::ShapeMismatch,
                  "Hamiltonian acts on " + std::to_string(h.num_qubits()) +
                      " qubits but an Ansatz state has " + std::to_string(s.num_qubits()));
    }
  }
  if (!h.is_hermitian(1e-12)) {
    throw Error(ErrorCode::NonHermitianHamiltonian,
                "Hamiltonian has complex coefficients; the solver needs Hermitian H");
  }
}

// Runs body(k) for k in [0, count). Each k writes only its own slots, so the
// result does not depend on the thread count.
template <class Body>
void for_each_column(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += workers) body(k);
    });
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double binomial_part(std::mt19937_64& rng, std::uint64_t shots, double value) {
  const double p = std::clamp((1.0 + value) / 2.0, 0.0, 1.0);
  std::binomial_distribution<std::uint64_t> draw(shots, p);
  const auto k = draw(rng);
  return 2.0 * static_cast<double>(k) / static_cast<double>(shots) - 1.0;
}

}  // namespace

OverlapPair build_overlap_matrices(const Hamiltonian& h, const AnsatzSet& ansatz,
                                   const BuildOptions& opts) {
  return build_overlap_matrices(h, ansatz.prepare_states(), opts);
}

OverlapPair build_overlap_matrices(const Hamiltonian& h, const std::vector<StateVector>& states,
                                   const BuildOptions& opts) {
  validate(h, states);
  const std::size_t m = states.size();
  OverlapPair out{ComplexMatrix(m, m), ComplexMatrix(m, m), std::nullopt};

  // Upper triangle only; column k needs U_i|phi_k> for every term.
  for_each_column(m, opts.threads, [&](std::size_t k) {
    std::vector<cplx> acc(k + 1);
    for (const auto& term : h.terms()) {
      const auto moved = apply_pauli(term.string, states[k]);
      for (std::size_t j = 0; j <= k; ++j) {
        acc[j] += term.coefficient * overlap(states[j], moved);
      }
    }
    for (std::size_t j = 0; j <= k; ++j) {
      out.D(j, k) = acc[j];
      out.E(j, k) = overlap(states[j], states[k]);
    }
  });
  for (std::size_t k = 0; k < m; ++k) {
    out.D(k, k) = out.D(k, k).real();
    out.E(k, k) = out.E(k, k).real();
    for (std::size_t j = 0; j < k; ++j) {
      out.D(k, j) = std::conj(out.D(j, k));
      out.E(k, j) = std::conj(out.E(j, k));
    }
  }
  return out;
}

cplx hadamard_estimate(const StateVector& a, const StateVector& b, std::uint64_t shots,
                       std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorCode::InvalidShots, "Hadamard test needs at least one shot");
  const cplx z = overlap(a, b);
  if (std::abs(std::abs(z) - 1.0) <= 1e-12) return z;
  std::mt19937_64 rng(seed);
  const double re = binomial_part(rng, shots, z.real());
  const double im = binomial_part(rng, shots, z.imag());
  return {re, im};
}

std::uint64_t entry_seed(std::uint64_t seed, std::size_t term, std::size_t j, std::size_t k) {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(term));
  h = splitmix64(h ^ static_cast<std::uint64_t>(j));
  h = splitmix64(h ^ static_cast<std::uint64_t>(k));
  return seed ^ h;
}

OverlapPair build_overlap_matrices_sampled(const Hamiltonian& h, const AnsatzSet& ansatz,
                                           std::uint64_t shots, std::uint64_t seed,
                                           const BuildOptions& opts) {
  return build_overlap_matrices_sampled(h, ansatz.prepare_states(), shots, seed, opts);
}

OverlapPair build_overlap_matrices_sampled(const Hamiltonian& h,
                                           const std::vector<StateVector>& states,
                                           std::uint64_t shots, std::uint64_t seed,
                                           const BuildOptions& opts) {
  if (shots == 0) throw Error(ErrorCode::InvalidShots, "shots must be positive");
  if (shots == kInfiniteShots) {
    auto exact = build_overlap_matrices(h, states, opts);
    exact.shot_meta = ShotMeta{shots, seed};
    return exact;
  }
  validate(h, states);
  const std::size_t m = states.size();
  const std::size_t n = h.size();
  ComplexMatrix d(m, m);
  ComplexMatrix e(m, m);

  for_each_column(m, opts.threads, [&](std::size_t k) {
    std::vector<cplx> acc(m);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& term = h.terms()[i];
      const auto moved = apply_pauli(term.string, states[k]);
      for (std::size_t j = 0; j < m; ++j) {
        acc[j] += term.coefficient *
                  hadamard_estimate(states[j], moved, shots, entry_seed(seed, i, j, k));
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      d(j, k) = acc[j];
      e(j, k) = j == k ? cplx{1.0}
                       : hadamard_estimate(states[j], states[k], shots, entry_seed(seed, n, j, k));
    }
  });

  OverlapPair out{hermitize(d), hermitize(e), ShotMeta{shots, seed}};
  for (std::size_t j = 0; j < m; ++j) out.E(j, j) = 1.0;
  return out;
}

}  // namespace qae
