#include <gtest/gtest.h>

#include <cmath>

#include "qae/errors.hpp"
#include "qae/pauli.hpp"
#include "support/test_support.hpp"

namespace qae {
namespace {

ComplexVector amplitudes(const StateVector& s) {
  return ComplexVector(s.amplitudes().begin(), s.amplitudes().end());
}

TEST(ParseHamiltonian, H2Model) {
  const auto h = parse_hamiltonian("0.4 0 ZI\n0.4 0 IZ\n0.2 0 XX\n");
  EXPECT_EQ(h.num_qubits(), 2u);
  ASSERT_EQ(h.size(), 3u);
  // Canonical order is lexicographic by label.
  EXPECT_EQ(h.terms()[0].string.str(), "IZ");
  EXPECT_EQ(h.terms()[1].string.str(), "XX");
  EXPECT_EQ(h.terms()[2].string.str(), "ZI");
  EXPECT_EQ(h.terms()[0].coefficient, cplx(0.4));
  EXPECT_EQ(h.terms()[1].coefficient, cplx(0.2));
  EXPECT_TRUE(h.is_hermitian());
}

TEST(ParseHamiltonian, IdentityTerm) {
  const auto h = parse_hamiltonian("1 0 II");
  EXPECT_EQ(h.num_qubits(), 2u);
  EXPECT_EQ(h.size(), 1u);
}

TEST(ParseHamiltonian, EmptyInput) {
  try {
    parse_hamiltonian("");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyHamiltonian);
  }
  EXPECT_THROW(parse_hamiltonian("# only a comment\n\n"), Error);
}

TEST(ParseHamiltonian, ShapeMismatch) {
  try {
    parse_hamiltonian("1 0 ZI\n1 0 ZZZ\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseHamiltonian, UnknownLabelReportsLine) {
  try {
    parse_hamiltonian("# header\n1 0 ZI\n0.5 0 ZQ\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(ParseHamiltonian, MergesDuplicatesAndKeepsComplex) {
  const auto h = parse_hamiltonian("1 0 XZ  # first\n0.5 -2 XZ\n1e-1 0 ZZ\n");
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h.terms()[0].coefficient, cplx(1.5, -2));
  EXPECT_FALSE(h.is_hermitian());
}

TEST(ParseHamiltonian, CanonicalRoundTripIsIdempotent) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  const char labels[] = "IXYZ";
  for (int trial = 0; trial < 50; ++trial) {
    std::string text;
    for (int t = 0; t < 6; ++t) {
      std::string s;
      for (int q = 0; q < 3; ++q) s.push_back(labels[rng() % 4]);
      text += std::to_string(n(rng)) + " " + std::to_string(n(rng)) + " " + s + "\n";
    }
    const auto once = to_text(parse_hamiltonian(text));
    const auto twice = to_text(parse_hamiltonian(once));
    EXPECT_EQ(once, twice);
  }
}

TEST(ApplyPauli, ZOnElevenFlipsSign) {
  const auto out = apply_pauli(PauliString::parse("ZI"), StateVector::basis(2, 3));
  EXPECT_EQ(out[3], cplx(-1.0));
}

TEST(ApplyPauli, XXOnElevenGivesZeroZero) {
  const auto out = apply_pauli(PauliString::parse("XX"), StateVector::basis(2, 3));
  EXPECT_EQ(out[0], cplx(1.0));
  EXPECT_EQ(out[3], cplx(0.0));
}

TEST(ApplyPauli, YOnZeroMatchesDenseProduct) {
  // Dense oracle: Y = [[0, -i], [i, 0]] times [1, 0].
  const ComplexMatrix y{{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}};
  const ComplexVector zero{1.0, 0.0};
  const auto expected = y * std::span<const cplx>(zero);
  const auto out = apply_pauli(PauliString::parse("Y"), StateVector(1));
  EXPECT_EQ(out[0], expected[0]);
  EXPECT_EQ(out[1], expected[1]);
  EXPECT_EQ(out[1], cplx(0, 1));
}

TEST(ApplyPauli, DimensionMismatch) {
  try {
    apply_pauli(PauliString::parse("XX"), StateVector(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
}

TEST(ApplyPauli, LeavesInputUnchanged) {
  std::mt19937_64 rng(5);
  const auto psi = testing::random_state(3, rng);
  const auto before = amplitudes(psi);
  (void)apply_pauli(PauliString::parse("XYZ"), psi);
  EXPECT_EQ(amplitudes(psi), before);
}

// Random strings and states: unitarity, involution, and agreement with the
// Kronecker-product dense matrix.
TEST(ApplyPauliProperty, UnitaryInvolutiveAndMatchesDense) {
  std::mt19937_64 rng(17);
  const char labels[] = "IXYZ";
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      std::string s;
      for (std::size_t q = 0; q < n; ++q) s.push_back(labels[rng() % 4]);
      const auto p = PauliString::parse(s);
      const auto psi = testing::random_state(n, rng);
      const auto once = apply_pauli(p, psi);
      EXPECT_NEAR(once.norm(), 1.0, 1e-12);
      const auto twice = apply_pauli(p, once);
      for (std::size_t x = 0; x < psi.dimension(); ++x) {
        EXPECT_NEAR(std::abs(twice[x] - psi[x]), 0.0, 1e-12);
      }
      const auto dense = dense_matrix(Hamiltonian(n, {{1.0, p}}));
      const auto ref = dense * psi.amplitudes();
      for (std::size_t x = 0; x < psi.dimension(); ++x) {
        EXPECT_NEAR(std::abs(ref[x] - once[x]), 0.0, 1e-12);
      }
    }
  }
}

TEST(DenseMatrix, H2Block) {
  const auto m = dense_matrix(h2_hamiltonian());
  // Block on {|00>, |11>} from a(ZI + IZ) + b XX by hand.
  EXPECT_NEAR(std::abs(m(0, 0) - 0.8), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(0, 3) - 0.2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(3, 0) - 0.2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(3, 3) + 0.8), 0.0, 1e-15);
  EXPECT_NEAR(anti_hermiticity(m), 0.0, 1e-15);
  // Ground energy -sqrt(a'^2 + b^2) with a' = 2a.
  EXPECT_NEAR(testing::eigen_spectrum(m)(0), -std::sqrt(0.68), 1e-14);
}

TEST(DenseMatrix, IdentityAndSingleZ) {
  const auto id = dense_matrix(parse_hamiltonian("1 0 II"));
  EXPECT_EQ(id, to_complex(RealMatrix::identity(4)));
  const auto z = dense_matrix(parse_hamiltonian("1 0 Z"));
  EXPECT_EQ(z, (ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}));
}

TEST(DenseMatrix, SizeCap) {
  const auto h = Hamiltonian(11, {{1.0, PauliString::parse(std::string(11, 'Z'))}});
  try {
    dense_matrix(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleSizeExceeded);
  }
}

}  // namespace
}  // namespace qae
