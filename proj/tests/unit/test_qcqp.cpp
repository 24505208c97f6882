#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "qae/errors.hpp"
#include "qae/qcqp.hpp"
#include "support/test_support.hpp"

namespace qae {
namespace {

const RealMatrix kD{{-0.8, 0.5, 0.5}, {0.5, -0.2, 0.0}, {0.5, 0.0, -0.2}};
const RealMatrix kE{{1.0, -0.5, -0.5}, {-0.5, 1.0, 0.0}, {-0.5, 0.0, 1.0}};
const RealVector kPrintedAlpha{0.87033111, -0.1221769, -0.1221776};

TEST(SolveP1, H2Fixture) {
  const auto s = solve_p1(kD, kE);
  EXPECT_NEAR(s.energy, -0.824621, 1e-6);
  EXPECT_NEAR(s.energy, -std::sqrt(0.68), 1e-12);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(s.alpha[i], kPrintedAlpha[i], 1e-5);
  EXPECT_LT(s.kkt_stationarity, 1e-8);
  EXPECT_LT(s.kkt_feasibility, 1e-8);
  EXPECT_LT(s.multiplier_gap, 1e-8);
  EXPECT_TRUE(s.second_order_ok);
  EXPECT_TRUE(s.global_certificate);
  EXPECT_FALSE(s.degenerate);
  EXPECT_EQ(s.rank, 3u);
}

TEST(SolveP1, DecoupledDiagonal) {
  const auto s = solve_p1(RealMatrix{{1, 0}, {0, 2}}, RealMatrix::identity(2));
  EXPECT_NEAR(s.energy, 1.0, 1e-15);
  EXPECT_NEAR(s.alpha[0], 1.0, 1e-15);
  EXPECT_NEAR(s.alpha[1], 0.0, 1e-15);
  EXPECT_NEAR(s.lambda, -1.0, 1e-15);
}

TEST(SolveP1, DegenerateGroundSpaceIsFlagged) {
  const auto s = solve_p1(RealMatrix::identity(3), RealMatrix::identity(3));
  EXPECT_TRUE(s.degenerate);
  EXPECT_NEAR(s.energy, 1.0, 1e-15);
}

TEST(SolveP1, Errors) {
  auto code_of = [](const RealMatrix& d, const RealMatrix& e) {
    try {
      solve_p1(d, e);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrorCode::OracleDisagreement;
  };
  EXPECT_EQ(code_of(RealMatrix{{1, 1}, {0, 1}}, RealMatrix::identity(2)), ErrorCode::NotSymmetric);
  EXPECT_EQ(code_of(RealMatrix::identity(2), RealMatrix(2, 2)), ErrorCode::DegenerateConstraint);
  EXPECT_EQ(code_of(RealMatrix::identity(2), RealMatrix::identity(3)), ErrorCode::ShapeMismatch);
}

TEST(SolveP1, RankDeficientGramRestrictsToSpan) {
  // Third state duplicates the first; E has rank 2.
  const RealMatrix e{{1, 0, 1}, {0, 1, 0}, {1, 0, 1}};
  const RealMatrix d{{2, 0, 2}, {0, 3, 0}, {2, 0, 2}};
  const auto s = solve_p1(d, e);
  EXPECT_EQ(s.rank, 2u);
  EXPECT_NEAR(s.energy, 2.0, 1e-12);
  EXPECT_NEAR(quadratic_form(e, s.alpha), 1.0, 1e-10);
}

TEST(KktResiduals, PrintedVectorSubstitution) {
  const auto r = kkt_residuals(kD, kE, kPrintedAlpha, 0.824621);
  EXPECT_LT(r.stationarity, 1e-5);
  EXPECT_LT(r.feasibility, 1e-5);
  EXPECT_LT(r.multiplier_gap, 1e-5);
  EXPECT_GT(r.stationarity + r.feasibility + r.multiplier_gap, 1e-9);
}

TEST(KktResiduals, DiagonalUnitVectorIsExact) {
  const RealMatrix d{{1, 0}, {0, 2}};
  const auto r = kkt_residuals(d, RealMatrix::identity(2), RealVector{1, 0}, -1.0);
  EXPECT_EQ(r.stationarity, 0.0);
  EXPECT_EQ(r.feasibility, 0.0);
  EXPECT_EQ(r.multiplier_gap, 0.0);
  const RealMatrix dense{{1, 0.5}, {0.5, 2}};
  const auto r2 = kkt_residuals(dense, RealMatrix::identity(2), RealVector{1, 0}, -1.0);
  EXPECT_DOUBLE_EQ(r2.stationarity, 0.5);
}

TEST(SecondOrder, AnalyticCases) {
  const RealMatrix d{{1, 0}, {0, 2}};
  const auto e = RealMatrix::identity(2);
  EXPECT_TRUE(second_order_check(d, e, RealVector{1, 0}, -1.0));
  EXPECT_FALSE(second_order_check(d, e, RealVector{0, 1}, -2.0));
  EXPECT_FALSE(certify_global(d, e, -2.0));
  EXPECT_TRUE(certify_global(d, e, -1.0));
  EXPECT_THROW(second_order_check(d, e, RealVector{0, 0}, -1.0), Error);
}

TEST(Certificate, H2OptimumAndExcitedPoints) {
  const auto points = stationary_points(kD, kE);
  ASSERT_EQ(points.size(), 3u);
  EXPECT_TRUE(certify_global(kD, kE, -points[0].energy));
  EXPECT_TRUE(certify_global(kD, kE, std::sqrt(0.68)));
  // The printed multiplier sits 1.25e-7 below the exact one.
  EXPECT_FALSE(certify_global(kD, kE, 0.824621));
  EXPECT_TRUE(certify_global(kD, kE, 0.824621, 1e-6));
  EXPECT_FALSE(certify_global(kD, kE, -points[1].energy));
  EXPECT_FALSE(certify_global(kD, kE, -points[2].energy));
  const auto m = certificate_matrix(kD, kE, 1.0);
  EXPECT_DOUBLE_EQ(m(0, 1), 0.0);
}

TEST(Certificate, RandomInstancesSeparateGroundFromExcited) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 2 + trial % 6;
    const auto d = testing::random_symmetric(m, rng);
    const auto e = testing::random_pd(m, rng);
    const auto s = solve_p1(d, e);
    EXPECT_TRUE(s.global_certificate);
    EXPECT_TRUE(s.second_order_ok);
    for (const auto& p : stationary_points(d, e)) {
      if (p.energy - s.energy > 1e-6) EXPECT_FALSE(certify_global(d, e, -p.energy));
    }
  }
}

TEST(Oracle, TrivialAndFixtureCases) {
  EXPECT_NEAR(oracle_min(kD, kE), -0.8246211, 1e-7);
  EXPECT_NEAR(oracle_min(RealMatrix(3, 3), kE), 0.0, 1e-15);
  EXPECT_NEAR(oracle_min(kE, kE), 1.0, 1e-12);
  try {
    oracle_min(RealMatrix::identity(17), RealMatrix::identity(17));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleSizeExceeded);
  }
}

TEST(SolveP1Property, MatchesEigenReference) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = testing::random_symmetric(4, rng);
    const auto e = testing::random_pd(4, rng);
    EXPECT_NEAR(solve_p1(d, e).energy, testing::generalized_spectrum(d, e)(0), 1e-10);
  }
}

TEST(SolveP1Property, FeasibilityMultiplierAndOracle) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + trial % 8;
    const auto d = testing::random_symmetric(m, rng);
    const auto e = testing::random_pd(m, rng);
    const auto s = solve_p1(d, e);
    EXPECT_LT(std::abs(quadratic_form(e, s.alpha) - 1.0), 1e-10);
    EXPECT_LT(std::abs(s.lambda + quadratic_form(d, s.alpha)), 1e-10);
    EXPECT_LT(std::abs(s.energy - oracle_min(d, e)), 1e-9);
  }
}

TEST(SolveP1Property, BeatsRandomFeasiblePoints) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + trial % 8;
    const auto d = testing::random_symmetric(m, rng);
    const auto e = testing::random_pd(m, rng);
    const double energy = solve_p1(d, e).energy;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 10'000; ++k)
      best = std::min(best, quadratic_form(d, testing::random_feasible_point(e, rng)));
    EXPECT_LE(energy, best + 1e-12);
  }
}

// Two stationary tuples that both pass the certificate share one energy.
TEST(SolveP1Property, CertifiedStationaryPointsAgree) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 2 + trial % 5;
    auto d = testing::random_symmetric(m, rng);
    const auto e = testing::random_pd(m, rng);
    if (trial % 2 == 0) d = 0.7 * e;  // fully degenerate pencil
    std::vector<double> certified;
    for (const auto& p : stationary_points(d, e))
      if (certify_global(d, e, -p.energy)) certified.push_back(p.energy);
    ASSERT_FALSE(certified.empty());
    for (double v : certified) EXPECT_NEAR(v, certified.front(), 1e-9);
  }
}

TEST(SolveP1Property, GrowingTheSubspaceNeverRaisesEnergy) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 6;
    const auto d = testing::random_symmetric(m, rng);
    const auto e = testing::random_pd(m, rng);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= m; ++k) {
      RealMatrix dk(k, k), ek(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          dk(i, j) = d(i, j);
          ek(i, j) = e(i, j);
        }
      const double energy = solve_p1(dk, ek).energy;
      EXPECT_LE(energy, prev + 1e-10);
      prev = energy;
    }
  }
}

TEST(CanonicalizeSign, LargestComponentPositive) {
  RealVector v{0.1, -0.9, 0.5};
  canonicalize_sign(v);
  EXPECT_EQ(v, (RealVector{-0.1, 0.9, -0.5}));
}

}  // namespace
}  // namespace qae
