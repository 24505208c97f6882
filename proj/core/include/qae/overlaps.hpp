#pragma once

// D_jk = sum_i beta_i <phi_j|U_i|phi_k> and E_jk = <phi_j|phi_k>, computed
// exactly from state vectors or through an emulated Hadamard test.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "qae/circuit.hpp"
#include "qae/linalg.hpp"
#include "qae/pauli.hpp"

namespace qae {

/// Passing this as the shot count to the sampled builder returns the exact
/// matrices (with shot metadata recorded).
inline constexpr std::uint64_t kInfiniteShots = std::numeric_limits<std::uint64_t>::max();

struct ShotMeta {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

struct OverlapPair {
  ComplexMatrix D;
  ComplexMatrix E;
  std::optional<ShotMeta> shot_meta;

  std::size_t size() const noexcept { return D.rows(); }
};

struct BuildOptions {
  /// Worker threads for the per-column loop; 0 and 1 both mean serial.
  unsigned threads = 0;
};

/// Exact builder. Throws ShapeMismatch if qubit counts disagree and
/// NonHermitianHamiltonian for complex coefficients.
OverlapPair build_overlap_matrices(const Hamiltonian& h, const AnsatzSet& ansatz,
                                   const BuildOptions& opts = {});
OverlapPair build_overlap_matrices(const Hamiltonian& h, const std::vector<StateVector>& states,
                                   const BuildOptions& opts = {});

/// Hadamard-test emulation of z = <a|b>: Re and Im are each estimated as
/// 2k/shots - 1 with k ~ Binomial(shots, (1 + part)/2), drawn from one
/// generator seeded by `seed`. When |z| = 1 to 1e-12 the test outcome is
/// deterministic and z is returned as is. Throws InvalidShots for 0 shots.
cplx hadamard_estimate(const StateVector& a, const StateVector& b, std::uint64_t shots,
                       std::uint64_t seed);

/// Seed of the private stream for entry (term, j, k). Terms 0..n-1 are
/// Hamiltonian terms; index n is used for the Gram matrix.
std::uint64_t entry_seed(std::uint64_t seed, std::size_t term, std::size_t j, std::size_t k);

/// Every <phi_j|U_i|phi_k> and <phi_j|phi_k> replaced by hadamard_estimate,
/// then D and E re-Hermitized as (M + M^dagger)/2 and diag(E) pinned to 1.
/// Output is bit-identical for any thread count.
OverlapPair build_overlap_matrices_sampled(const Hamiltonian& h, const AnsatzSet& ansatz,
                                           std::uint64_t shots, std::uint64_t seed,
                                           const BuildOptions& opts = {});
OverlapPair build_overlap_matrices_sampled(const Hamiltonian& h,
                                           const std::vector<StateVector>& states,
                                           std::uint64_t shots, std::uint64_t seed,
                                           const BuildOptions& opts = {});

}  // namespace qae
