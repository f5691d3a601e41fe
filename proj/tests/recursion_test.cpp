#include "specgraph/recursion.hpp"

#include <gtest/gtest.h>

#include "specgraph/corpus.hpp"
#include "specgraph/spectrum.hpp"
#include "specgraph/surplus.hpp"

namespace sg = specgraph;

TEST(KeyRecursion, CompleteHundredAtFortyByHand) {
  // K_100: lambda = (99, -1 x 99), floor 4 * 1 * 10 = 40.
  // S_40 = 99, S_{1600/400} = S_4 = 99, and 99^2 <= 200 * 99.
  sg::Spectrum s = sg::decompose(sg::generate(sg::GraphFamilySpec::complete(100)));
  sg::ThresholdProfile prof(s);
  auto rep = sg::verify_key_recursion(prof, s.lambda_n(), {40.0});
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.overall, sg::CheckStatus::Pass);
  EXPECT_NEAR(rep.rows[0].s_t, 99.0, 1e-8);
  EXPECT_NEAR(rep.rows[0].rhs, 200.0 * 99.0, 1e-6);
}

TEST(KeyRecursion, EmptyGraphTrivial) {
  sg::Spectrum s = sg::decompose(
      sg::generate(sg::GraphFamilySpec::union_cliques(std::vector<int>(7, 1))));
  sg::ThresholdProfile prof(s);
  auto rep = sg::verify_key_recursion(
      prof, s.lambda_n(), sg::default_threshold_grid(prof, 0.0));
  EXPECT_NE(rep.overall, sg::CheckStatus::Fail);
}

TEST(KeyRecursion, BelowFloorPointsAreRejected) {
  sg::Spectrum s = sg::decompose(sg::generate(sg::GraphFamilySpec::complete(100)));
  sg::ThresholdProfile prof(s);
  auto rep = sg::verify_key_recursion(prof, s.lambda_n(), {10.0, 50.0});
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(rep.rows[0].status, sg::CheckStatus::NotApplicable);
  EXPECT_FALSE(rep.rows[0].note.empty());
  EXPECT_EQ(rep.rows[1].status, sg::CheckStatus::Pass);
}

TEST(KeyRecursion, HoldsAcrossRandomCorpus) {
  // the inequality is unconditional for valid T; any failure is a defect
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    sg::Graph g = sg::generate(sg::GraphFamilySpec::erdos_renyi(100, 0.5, seed));
    sg::Spectrum s = sg::decompose(g);
    sg::ThresholdProfile prof(s);
    auto rep = sg::verify_key_recursion(
        prof, s.lambda_n(),
        sg::default_threshold_grid(prof, sg::key_recursion_floor(s)));
    EXPECT_NE(rep.overall, sg::CheckStatus::Fail) << seed;
  }
}

TEST(SurplusRecursion, GateRejectsLargeSurplus) {
  sg::Spectrum s = sg::decompose(
      sg::generate(sg::GraphFamilySpec::complete_bipartite(8, 8)));
  sg::ThresholdProfile prof(s);
  // dual upper for K_{8,8} is 64, far above n^{1+c}/2 ~ 8.2
  auto rep = sg::verify_surplus_recursion(
      prof, sg::dual_upper(s).value,
      sg::default_threshold_grid(prof, sg::surplus_recursion_floor(16)));
  EXPECT_EQ(rep.overall, sg::CheckStatus::NotApplicable);
}

TEST(SurplusRecursion, CompleteGraphsPassGate) {
  for (int n : {100, 200, 256}) {
    sg::Spectrum s = sg::decompose(sg::generate(sg::GraphFamilySpec::complete(n)));
    sg::ThresholdProfile prof(s);
    double upper = sg::dual_upper(s).value;
    ASSERT_LE(upper, sg::surplus_recursion_gate(n));
    auto rep = sg::verify_surplus_recursion(
        prof, upper,
        sg::default_threshold_grid(prof, sg::surplus_recursion_floor(n)));
    EXPECT_EQ(rep.overall, sg::CheckStatus::Pass) << n;
  }
}

TEST(SolveRecursion, PaperParameterSets) {
  const double c = 1.0 / 99.0;
  sg::RecursionParams first{(2.0 + c) / 3.0, 1.0 + c, 1.0 - 2.0 * c, 250.0,
                            1000};
  EXPECT_NEAR(first.s(), 0.5, 1e-12);

  const double gamma = 1.0 / 200.0;
  sg::RecursionParams second{(2.0 + gamma) / 3.0, 1.0 + gamma, 1.0 - 2.0 * c,
                             250.0, 1000};
  EXPECT_NEAR(second.s(), 99.0 / 400.0, 1e-12);

  const double eps = 0.01;
  sg::RecursionParams third{0.25 - eps, 1.25 - eps, 0.75 - eps, 4.0, 1000};
  EXPECT_NEAR(third.s(), (0.25 - eps) / (0.25 + eps), 1e-12);
  EXPECT_NEAR(third.s(), 0.923076923076923, 1e-12);
}

TEST(SolveRecursion, ClosedFormAndRangeChecks) {
  sg::RecursionParams p{0.24, 1.24, 0.74, 4.0, 100};
  double s = p.s();
  double h = 50.0;
  double expect = 2.0 * std::pow(4.0, 1.0 + s) / (1.0 - s) *
                  std::pow(100.0, 1.0 + s) * std::pow(h, 1.0 - s);
  EXPECT_NEAR(sg::solve_recursion(p, h), expect, 1e-6 * expect);
  EXPECT_THROW(sg::solve_recursion(p, 1e9), std::invalid_argument);
  EXPECT_THROW(sg::solve_recursion(p, 1.0), std::invalid_argument);
  sg::RecursionParams bad{0.25, 1.25, 0.75, 4.0, 100};  // q + r = 2
  EXPECT_THROW(sg::solve_recursion(bad, 50.0), std::invalid_argument);
}

TEST(SolveRecursion, Monotonicity) {
  sg::RecursionParams p{0.24, 1.24, 0.74, 4.0, 100};
  double base = sg::solve_recursion(p, 50.0);
  sg::RecursionParams bigger_c = p;
  bigger_c.c = 8.0;
  EXPECT_GE(sg::solve_recursion(bigger_c, 50.0), base);
  sg::RecursionParams bigger_n = p;
  bigger_n.n = 200;
  EXPECT_GE(sg::solve_recursion(bigger_n, 50.0), base);
  EXPECT_GE(sg::solve_recursion(p, 90.0), base);  // grows as H^{1-s}
}

TEST(SolveRecursion, ExponentVersusParameterRelation) {
  // s < 1 exactly when q + r < 2
  for (double q : {1.1, 1.3, 1.6}) {
    for (double r : {0.2, 0.5, 0.8}) {
      sg::RecursionParams p{0.3, q, r, 2.0, 64};
      if (p.valid()) {
        EXPECT_LT(q + r, 2.0);
        EXPECT_LT(p.s(), 1.0);
      }
      if (q + r < 2.0 && q > 1.0) EXPECT_LT((q - 1.0) / (1.0 - r), 1.0);
    }
  }
}

TEST(VerifySolver, EmptyAndCompleteGraphs) {
  sg::Spectrum empty = sg::decompose(sg::generate(
      sg::GraphFamilySpec::union_cliques(std::vector<int>(100, 1))));
  sg::RecursionParams p{0.24, 1.24, 0.74, 4.0, 100};
  auto check = sg::verify_solver_against_spectrum(empty, p, 50.0);
  EXPECT_EQ(check.status, sg::CheckStatus::Pass);
  EXPECT_EQ(check.tail_mass, 0.0);

  sg::Spectrum complete =
      sg::decompose(sg::generate(sg::GraphFamilySpec::complete(100)));
  auto check2 = sg::verify_solver_against_spectrum(complete, p, 50.0);
  EXPECT_EQ(check2.status, sg::CheckStatus::Pass);
  EXPECT_NEAR(check2.tail_mass, 99.0, 1e-8);
}

TEST(VerifySolver, GateRejectsWhenHypothesesFail) {
  // K_{50,50}: -lambda_n = 50 > 4 * 100^0.24
  sg::Spectrum s = sg::decompose(
      sg::generate(sg::GraphFamilySpec::complete_bipartite(50, 50)));
  sg::RecursionParams p{0.24, 1.24, 0.74, 4.0, 100};
  auto check = sg::verify_solver_against_spectrum(s, p, 50.0);
  EXPECT_EQ(check.status, sg::CheckStatus::NotApplicable);
  EXPECT_FALSE(check.note.empty());
}

TEST(VerifySolver, UnionsOfCliques) {
  sg::RecursionParams p{0.24, 1.24, 0.74, 4.0, 0};
  for (int k : {4, 8, 16}) {
    sg::Graph g = sg::generate(sg::GraphFamilySpec::union_cliques(
        std::vector<int>(static_cast<std::size_t>(64 / k), k)));
    sg::Spectrum s = sg::decompose(g);
    p.n = s.n;
    auto check = sg::verify_solver_against_spectrum(s, p, 32.0);
    EXPECT_NE(check.status, sg::CheckStatus::Fail) << k;
  }
}

TEST(TopConcentration, GateArithmetic) {
  // union of two cliques n/2: gate open, mass n-2 vs delta n^2
  sg::Spectrum s = sg::decompose(
      sg::generate(sg::GraphFamilySpec::union_cliques({64, 64})));
  auto check = sg::check_top_concentration(s, 0.009, 0.009);
  EXPECT_EQ(check.status, sg::CheckStatus::Pass);
  EXPECT_NEAR(check.mass, 126.0, 1e-8);

  sg::Spectrum empty = sg::decompose(sg::generate(
      sg::GraphFamilySpec::union_cliques(std::vector<int>(10, 1))));
  EXPECT_EQ(sg::check_top_concentration(empty, 0.009, 0.009).status,
            sg::CheckStatus::Pass);

  // K_{n/2,n/2}: lambda_n = -n/2 closes the gate
  sg::Spectrum bip = sg::decompose(
      sg::generate(sg::GraphFamilySpec::complete_bipartite(32, 32)));
  EXPECT_EQ(sg::check_top_concentration(bip, 0.009, 0.009).status,
            sg::CheckStatus::NotApplicable);

  // at small n the asymptotic claim honestly fails
  sg::Spectrum small = sg::decompose(
      sg::generate(sg::GraphFamilySpec::union_cliques({8, 8})));
  EXPECT_EQ(sg::check_top_concentration(small, 0.009, 0.009).status,
            sg::CheckStatus::Fail);

  EXPECT_THROW(sg::check_top_concentration(s, 0.05, 0.009),
               std::invalid_argument);
}

TEST(DefaultGrid, GeometricAndEmpty) {
  sg::Spectrum s = sg::decompose(sg::generate(sg::GraphFamilySpec::complete(100)));
  sg::ThresholdProfile prof(s);
  auto grid = sg::default_threshold_grid(prof, 40.0);
  ASSERT_EQ(grid.size(), 32u);
  EXPECT_NEAR(grid.front(), 40.0, 1e-12);
  EXPECT_NEAR(grid.back(), 99.0, 1e-9);
  for (std::size_t i = 1; i < grid.size(); ++i)
    EXPECT_GT(grid[i], grid[i - 1]);
  // floor above lambda_1: nothing to check
  EXPECT_TRUE(sg::default_threshold_grid(prof, 1000.0).empty());
}
