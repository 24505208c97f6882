#include <gtest/gtest.h>

#include <cmath>

#include "qae/errors.hpp"
#include "qae/matrix_io.hpp"
#include "qae/pipeline.hpp"
#include "support/test_support.hpp"

namespace qae {
namespace {

TEST(MatrixIo, RealPair) {
  const auto pair = parse_matrix_pair("2\n1 0.5\n0.5 2\n\n1 0\n0 1\n");
  EXPECT_FALSE(pair.complex);
  EXPECT_EQ(pair.D(0, 1), cplx(0.5));
  EXPECT_EQ(pair.E(1, 1), cplx(1.0));
  EXPECT_EQ(parse_matrix_pair(to_matrix_text(pair.D, pair.E, false)).D, pair.D);
}

TEST(MatrixIo, ComplexPairRoundTrip) {
  std::mt19937_64 rng(51);
  const auto d = testing::random_hermitian(3, rng);
  const auto e = testing::random_hermitian_pd(3, rng);
  const auto pair = parse_matrix_pair(to_matrix_text(d, e, true));
  EXPECT_TRUE(pair.complex);
  EXPECT_EQ(pair.D, d);
  EXPECT_EQ(pair.E, e);
}

TEST(MatrixIo, Errors) {
  EXPECT_THROW(parse_matrix_pair("2\n1 0\n0 1\n\n1 0\n"), Error);
  EXPECT_THROW(parse_matrix_pair("x\n"), Error);
  EXPECT_THROW(parse_matrix_pair("2\n1 0 3\n0 1\n\n1 0\n0 1\n"), Error);
}

PipelineOptions exact() { return {}; }

TEST(Report, JsonRoundTripIsByteIdentical) {
  auto r = run_pipeline(h2_hamiltonian(), h2_ansatz(), exact());
  r.command = "demo-h2";
  r.tool_version = "test";
  r.diagnostics.push_back("note");
  const auto text = to_json(r);
  EXPECT_EQ(to_json(parse_report(text)), text);
  EXPECT_EQ(text.back(), '\n');
}

TEST(Report, SampledRoundTripKeepsShotMeta) {
  PipelineOptions opts;
  opts.shots = 500;
  opts.seed = 9;
  const auto r = run_pipeline(h2_hamiltonian(), h2_ansatz(), opts);
  const auto back = parse_report(to_json(r));
  ASSERT_TRUE(back.overlaps && back.overlaps->shot_meta);
  EXPECT_EQ(back.overlaps->shot_meta->shots, 500u);
  EXPECT_EQ(back.overlaps->shot_meta->seed, 9u);
  EXPECT_EQ(to_json(back), to_json(r));
}

TEST(Report, MalformedJsonRejected) {
  try {
    parse_report("{not json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(Report, EmbeddedMatricesReproduceSolution) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_instance(4, 3, seed);
    const auto r = parse_report(to_json(run_pipeline(inst.hamiltonian, inst.ansatz, exact())));
    Report again;
    again.overlaps = r.overlaps;
    run_stages(again, exact(), {.solve = true, .bounds = false});
    EXPECT_NEAR(again.solution->energy, r.solution->energy, 1e-10);
  }
}

TEST(Report, EnergiesAreOrdered) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = random_instance(3 + seed % 4, 2 + seed % 3, seed);
    const auto r = run_pipeline(inst.hamiltonian, inst.ansatz, exact());
    ASSERT_TRUE(r.bounds && r.solution);
    EXPECT_LE(r.bounds->dual_bound, r.solution->energy + 1e-7);
    EXPECT_LE(r.solution->energy, r.bounds->rounded_energy + 1e-7);
  }
}

TEST(RandomInstance, Reproducible) {
  const auto a = random_instance(4, 3, 42);
  const auto b = random_instance(4, 3, 42);
  EXPECT_EQ(to_text(a.hamiltonian), to_text(b.hamiltonian));
  EXPECT_EQ(to_text(a.ansatz), to_text(b.ansatz));
  EXPECT_NE(to_text(random_instance(4, 3, 43).ansatz), to_text(a.ansatz));
}

}  // namespace
}  // namespace qae
