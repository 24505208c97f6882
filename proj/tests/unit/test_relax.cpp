#include <gtest/gtest.h>

#include <cmath>

#include "qae/errors.hpp"
#include "qae/relax.hpp"
#include "support/test_support.hpp"

namespace qae {
namespace {

const RealMatrix kD{{-0.8, 0.5, 0.5}, {0.5, -0.2, 0.0}, {0.5, 0.0, -0.2}};
const RealMatrix kE{{1.0, -0.5, -0.5}, {-0.5, 1.0, 0.0}, {-0.5, 0.0, 1.0}};

TEST(DualBound, H2IsTight) {
  const auto b = dual_bound(kD, kE);
  EXPECT_NEAR(b.bound, -0.8246211, 1e-7);
  EXPECT_NEAR(b.bound, oracle_min(kD, kE), 1e-8);
  EXPECT_DOUBLE_EQ(b.multiplier_plus_convention(), -b.bound);
}

TEST(DualBound, IdentityPencil) {
  EXPECT_NEAR(dual_bound(RealMatrix::identity(2), RealMatrix::identity(2)).bound, 1.0, 1e-9);
}

TEST(DualBound, IterationCountBounded) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 1 + trial % 8;
    const auto b = dual_bound(testing::random_symmetric(m, rng), testing::random_pd(m, rng));
    const double limit = std::ceil(std::log2(2 * b.radius / DualOptions{}.tol));
    EXPECT_LE(b.iterations, limit);
  }
}

TEST(DualBound, IndefiniteGramIsRestrictedToPositiveSpan) {
  // The negative direction of E is truncated, so the bracket stays valid.
  const RealMatrix e{{1, 0}, {0, -1}};
  const RealMatrix d{{2, 0.5}, {0.5, -3}};
  const auto b = dual_bound(d, e);
  EXPECT_NEAR(b.bound, 2.0, 1e-9);
  EXPECT_NEAR(b.bound, solve_p1(d, e).energy, 1e-9);
}

TEST(DualBoundProperty, StrongAndWeakDuality) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 1 + trial % 8;
    const auto d = testing::random_symmetric(m, rng);
    const auto e = testing::random_pd(m, rng);
    const double primal = solve_p1(d, e).energy;
    const double dual = dual_bound(d, e).bound;
    EXPECT_LE(dual, primal + 1e-9);
    EXPECT_LT(std::abs(dual - primal), 1e-7);
  }
}

TEST(DualBoundProperty, WeakDualityOnNearSingularGram) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 2 + trial % 7;
    const auto d = testing::random_symmetric(m, rng);
    const auto e = testing::random_low_rank_gram(m, 1 + trial % (m - 1), rng);
    const double primal = solve_p1(d, e).energy;
    EXPECT_LE(dual_bound(d, e).bound, primal + 1e-9);
  }
}

TEST(SdpBound, H2AndDiagonal) {
  const auto h2 = sdp_bound(kD, kE);
  EXPECT_NEAR(h2.value, dual_bound(kD, kE).bound, 1e-6);
  EXPECT_TRUE(h2.converged);
  const auto s = sdp_bound(RealMatrix{{1, 0}, {0, 2}}, RealMatrix::identity(2));
  EXPECT_NEAR(s.value, 1.0, 1e-9);
  EXPECT_NEAR(s.X(0, 0), 1.0, 1e-6);
  EXPECT_NEAR(s.X(1, 1), 0.0, 1e-6);
  EXPECT_NEAR(s.X(0, 1), 0.0, 1e-6);
}

TEST(SdpBoundProperty, Sandwich) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 8;
    const auto d = testing::random_symmetric(m, rng);
    const auto e = testing::random_pd(m, rng);
    const double primal = solve_p1(d, e).energy;
    const double dual = dual_bound(d, e).bound;
    const auto sdp = sdp_bound(d, e);
    EXPECT_GE(sdp.value, dual - 1e-6);
    EXPECT_LE(sdp.value, primal + 1e-6);
    double trace = 0.0;
    const auto ex = e * sdp.X;
    for (std::size_t i = 0; i < m; ++i) trace += ex(i, i);
    EXPECT_NEAR(trace, 1.0, 1e-9);
    EXPECT_GE(testing::eigen_spectrum(sdp.X)(0), -1e-9);
  }
}

TEST(ProjectSpectraplex, KeepsFeasiblePointsAndProjectsOthers) {
  const RealMatrix inside{{0.5, 0.1}, {0.1, 0.5}};
  const auto p = project_spectraplex(inside);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(p.data()[i], inside.data()[i], 1e-12);
  const auto q = project_spectraplex(RealMatrix{{3, 0}, {0, -1}});
  EXPECT_NEAR(q(0, 0), 1.0, 1e-12);
  EXPECT_NEAR(q(1, 1), 0.0, 1e-12);
}

TEST(RoundFeasible, RankOneRecoversOptimum) {
  const auto s = solve_p1(kD, kE);
  RealMatrix x(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) x(i, j) = s.alpha[i] * s.alpha[j];
  const auto r = round_feasible(x, kD, kE, 100, 1);
  EXPECT_NEAR(r.energy, -0.824621, 1e-6);
  EXPECT_NEAR(r.energy, s.energy, 1e-9);
  EXPECT_TRUE(r.from_eigenvector);
  EXPECT_EQ(r.sample, -1);
}

TEST(RoundFeasible, IdentityRelaxationApproachesBestDirection) {
  const RealMatrix d{{1, 0}, {0, 2}};
  const auto r = round_feasible(0.5 * RealMatrix::identity(2), d, RealMatrix::identity(2), 5000, 3);
  EXPECT_NEAR(r.energy, 1.0, 1e-3);
  EXPECT_NEAR(quadratic_form(RealMatrix::identity(2), r.alpha), 1.0, 1e-12);
}

TEST(RoundFeasible, ZeroMatrixRejected) {
  try {
    round_feasible(RealMatrix(2, 2), RealMatrix::identity(2), RealMatrix::identity(2), 10, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateRelaxation);
  }
}

TEST(RoundFeasibleProperty, FeasibleAndNeverBelowOptimum) {
  std::mt19937_64 rng(45);
  int close = 0;
  constexpr int kTrials = 100;
  for (int trial = 0; trial < kTrials; ++trial) {
    const std::size_t m = 2 + trial % 7;
    const auto d = testing::random_symmetric(m, rng);
    const auto e = testing::random_pd(m, rng);
    const double primal = solve_p1(d, e).energy;
    const auto sdp = sdp_bound(d, e);
    const auto r = round_feasible(sdp.X, d, e, 1000, static_cast<std::uint64_t>(trial));
    EXPECT_LT(std::abs(quadratic_form(e, r.alpha) - 1.0), 1e-10);
    EXPECT_GE(r.energy, primal - 1e-9);
    const auto gen = testing::generalized_spectrum(d, e);
    const double spread = gen(gen.size() - 1) - gen(0);
    if (r.energy - primal <= 0.05 * spread) ++close;
  }
  EXPECT_GE(close, 95);
}

TEST(ComputeBounds, H2Report) {
  const double primal = solve_p1(kD, kE).energy;
  const auto b = compute_bounds(kD, kE, primal);
  EXPECT_LE(b.dual_bound, primal + 1e-9);
  EXPECT_LE(primal, b.rounded_energy + 1e-9);
  EXPECT_NEAR(b.sdp_bound, primal, 1e-6);
  EXPECT_GT(b.dual_iterations, 0);
}

TEST(P2, H2ExportHasFlippedConstraintPair) {
  const auto doc = parse_p2(export_p2(kD, kE));
  EXPECT_EQ(doc.objective, kD);
  ASSERT_EQ(doc.constraints.size(), 2u);
  EXPECT_EQ(doc.constraints[0].sign, 1);
  EXPECT_EQ(doc.constraints[0].offset, -1.0);
  EXPECT_EQ(doc.constraints[0].matrix, kE);
  EXPECT_EQ(doc.constraints[1].sign, -1);
  EXPECT_EQ(doc.constraints[1].offset, 1.0);
  EXPECT_EQ(doc.constraints[1].matrix, -1.0 * kE);
}

TEST(P2, ScalarCase) {
  const auto text = export_p2(RealMatrix{{3.0}}, RealMatrix{{1.0}});
  EXPECT_EQ(text,
            "QCQP m=1\nOBJ\n3\nCON sign=+1 offset=-1\n1\nCON sign=-1 offset=1\n-1\n");
}

TEST(P2, RoundTripIsExact) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 1 + trial % 8;
    const auto d = testing::random_symmetric(m, rng);
    const auto e = testing::random_pd(m, rng);
    const auto [d2, e2] = p2_to_pair(parse_p2(export_p2(d, e)));
    EXPECT_EQ(d2, d);
    EXPECT_EQ(e2, e);
  }
}

TEST(P2, ParseErrorsCarryLineNumbers) {
  try {
    parse_p2("QCQP m=2\nOBJ\n1 2\nfoo bar\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(p2_to_pair(parse_p2("QCQP m=1\nOBJ\n1\nCON sign=+1 offset=-1\n1\n")), Error);
}

}  // namespace
}  // namespace qae
