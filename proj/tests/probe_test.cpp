#include "specgraph/probe.hpp"

#include <gtest/gtest.h>

#include "specgraph/corpus.hpp"

namespace sg = specgraph;

TEST(HadamardSpan, CompleteGraphRankOne) {
  sg::Spectrum s = sg::decompose(sg::generate(sg::GraphFamilySpec::complete(4)));
  sg::Subspace w = sg::hadamard_span(s, 2.0);
  ASSERT_EQ(w.dim(), 1);
  // v_1 o v_1 = ones/4, normalized to ones/2
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(w.basis(k, 0), 0.5, 1e-9);
}

TEST(HadamardSpan, K2RankOne) {
  sg::Graph k2 = sg::generate(sg::GraphFamilySpec::complete(2));
  sg::Spectrum s = sg::decompose(k2);
  sg::Subspace w = sg::hadamard_span(s, 0.5);
  ASSERT_EQ(w.dim(), 1);
  for (int k = 0; k < 2; ++k)
    EXPECT_NEAR(w.basis(k, 0), 1.0 / std::sqrt(2.0), 1e-9);
}

TEST(HadamardSpan, EmptyLevelSetRejected) {
  sg::Spectrum s = sg::decompose(sg::generate(sg::GraphFamilySpec::complete(4)));
  EXPECT_THROW(sg::hadamard_span(s, 10.0), std::invalid_argument);
}

TEST(HadamardSpan, DimensionMatchesGramRank) {
  // cross-check against the rank of the Gram matrix of the product vectors
  for (const auto& entry : sg::corpus_with_max_n(32)) {
    sg::Spectrum s = sg::decompose(entry.graph);
    if (s.lambda_1() <= 0.5) continue;
    double threshold = s.lambda_1() / 2.0;
    sg::Subspace w = sg::hadamard_span(s, threshold);
    sg::ThresholdProfile prof(s);
    int k = prof.level_set_size(threshold);
    std::vector<Eigen::VectorXd> prods;
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j)
        prods.push_back(s.vectors.col(i).cwiseProduct(s.vectors.col(j)));
    Eigen::MatrixXd gram(prods.size(), prods.size());
    for (std::size_t a = 0; a < prods.size(); ++a)
      for (std::size_t b = 0; b < prods.size(); ++b)
        gram(static_cast<int>(a), static_cast<int>(b)) =
            prods[a].dot(prods[b]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
    int rank = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()[i] > 1e-10) ++rank;
    EXPECT_EQ(w.dim(), rank) << entry.name;
    EXPECT_LE(w.dim(), k * k) << entry.name;
    // basis orthonormal
    Eigen::MatrixXd i_check = w.basis.transpose() * w.basis;
    EXPECT_LE((i_check - Eigen::MatrixXd::Identity(w.dim(), w.dim()))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-9)
        << entry.name;
  }
}

TEST(SampleGaussian, ScalarSubspace) {
  sg::Spectrum s = sg::decompose(sg::generate(sg::GraphFamilySpec::complete(4)));
  sg::Subspace w = sg::hadamard_span(s, 2.0);
  sg::ProbeVector q = sg::sample_gaussian(w, 42);
  // q is a scalar multiple of the basis vector
  double scale = q.entries[0] / w.basis(0, 0);
  for (int k = 0; k < 4; ++k)
    EXPECT_NEAR(q.entries[k], scale * w.basis(k, 0), 1e-12);
  // deterministic per seed
  sg::ProbeVector q2 = sg::sample_gaussian(w, 42);
  EXPECT_EQ((q.entries - q2.entries).cwiseAbs().maxCoeff(), 0.0);
}

TEST(SampleGaussian, SecondMomentsMatchWithinFivePercent) {
  // E ||q||^2 = dim W and E <w, q>^2 = ||Pi_W w||^2
  sg::Spectrum s = sg::decompose(
      sg::generate(sg::GraphFamilySpec::union_cliques({8, 8})));
  sg::Subspace w = sg::hadamard_span(s, 3.0);
  const int dim = w.dim();
  ASSERT_GE(dim, 1);
  Eigen::VectorXd probe = Eigen::VectorXd::Zero(16);
  probe[0] = 1.0;
  probe[3] = -2.0;
  probe[9] = 0.5;
  double expect_proj = (w.basis.transpose() * probe).squaredNorm();

  const int samples = 10000;
  double norm_sum = 0.0, ip_sum = 0.0;
  for (int t = 0; t < samples; ++t) {
    sg::ProbeVector q =
        sg::sample_gaussian(w, sg::rng::mix(99, static_cast<std::uint64_t>(t)));
    norm_sum += q.entries.squaredNorm();
    double ip = probe.dot(q.entries);
    ip_sum += ip * ip;
  }
  EXPECT_NEAR(norm_sum / samples, static_cast<double>(dim), 0.05 * dim);
  EXPECT_NEAR(ip_sum / samples, expect_proj, 0.05 * std::max(expect_proj, 0.1));
  EXPECT_LE(expect_proj, probe.squaredNorm());
}

TEST(Clip, HandArithmetic) {
  sg::ProbeVector q;
  q.entries = Eigen::VectorXd(2);
  q.entries << 3.0, -1.0;
  // ||q|| = sqrt(10), x = sqrt(5), so only the first entry clamps
  // (beta must exceed 1; 1 + 1e-12 keeps the level at x)
  sg::ProbeVector out = sg::clip(q, 1.0 + 1e-12);
  EXPECT_NEAR(out.entries[0], std::sqrt(5.0), 1e-9);
  EXPECT_NEAR(out.entries[1], -1.0, 1e-12);
  EXPECT_TRUE(out.clipped);
}

TEST(Clip, ZeroAndInactive) {
  sg::ProbeVector zero;
  zero.entries = Eigen::VectorXd::Zero(5);
  sg::ProbeVector out = sg::clip(zero, 2.0);
  EXPECT_EQ(out.entries.cwiseAbs().maxCoeff(), 0.0);

  sg::ProbeVector q;
  q.entries = Eigen::VectorXd(3);
  q.entries << 1.0, 1.0, 1.0;
  // beta >= sqrt(n) ||q||_inf / ||q||_2 = 1 leaves q unchanged
  sg::ProbeVector same = sg::clip(q, 1.5);
  EXPECT_EQ((same.entries - q.entries).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Clip, NormContractionAndIdempotence) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Eigen::VectorXd v(8);
    for (int i = 0; i < 8; ++i)
      v[i] = sg::rng::normal(seed, static_cast<std::uint64_t>(i)) *
             (i == 0 ? 5.0 : 1.0);
    sg::ProbeVector q;
    q.entries = v;
    for (double beta : {1.1, 1.5, 2.0, 4.0}) {
      sg::ProbeVector c1 = sg::clip(q, beta);
      EXPECT_LE(c1.entries.norm(), q.entries.norm() + 1e-12);
      EXPECT_LE((q.entries - c1.entries).norm(), q.entries.norm() + 1e-12);
      sg::ProbeVector c2 = sg::clip(c1, beta);
      EXPECT_EQ((c2.entries - c1.entries).cwiseAbs().maxCoeff(), 0.0);
      EXPECT_LE(c1.entries.cwiseAbs().maxCoeff(),
                beta * q.entries.norm() / std::sqrt(8.0) + 1e-12);
    }
  }
}

TEST(HadamardIdentity, K2HandValue) {
  sg::Graph k2 = sg::generate(sg::GraphFamilySpec::complete(2));
  sg::Spectrum s = sg::decompose(k2);
  Eigen::VectorXd q(2);
  q << 1.0, 0.0;
  auto check = sg::hadamard_identity_check(k2, s, q);
  EXPECT_NEAR(check.lhs, 0.0, 1e-12);
  EXPECT_NEAR(check.rhs, 0.0, 1e-12);  // 1/4 - 1/2 + 1/4
  EXPECT_NEAR(check.quad_form, 0.0, 1e-12);
  EXPECT_TRUE(check.pass);
}

TEST(HadamardIdentity, ZeroProbe) {
  sg::Graph g = sg::generate(sg::GraphFamilySpec::paley(13));
  sg::Spectrum s = sg::decompose(g);
  auto check = sg::hadamard_identity_check(g, s, Eigen::VectorXd::Zero(13));
  EXPECT_EQ(check.lhs, 0.0);
  EXPECT_EQ(check.rhs, 0.0);
  EXPECT_TRUE(check.pass);
}

TEST(HadamardIdentity, PetersenRandomProbes) {
  sg::Graph g = sg::petersen();
  sg::Spectrum s = sg::decompose(g);
  for (std::uint64_t p = 0; p < 100; ++p) {
    Eigen::VectorXd q(10);
    for (int v = 0; v < 10; ++v)
      q[v] = sg::rng::normal(1234, p * 10 + static_cast<std::uint64_t>(v));
    EXPECT_TRUE(sg::hadamard_identity_check(g, s, q).pass) << p;
    sg::ProbeVector pv;
    pv.entries = q;
    EXPECT_TRUE(sg::hadamard_identity_check(g, s, sg::clip(pv, 1.5)).pass)
        << p;
  }
}

TEST(Truncation, CompleteFourClosedForm) {
  // W is one-dimensional; q = x * ones/2, never clamped at beta = 32.
  // E<v1 o v1, Tq>^2 = 1/4 against the bound (1/2 - 1/4)^2 = 1/16,
  // E<v1, Tq>^2 = 1 <= 25.
  sg::Spectrum s = sg::decompose(sg::generate(sg::GraphFamilySpec::complete(4)));
  auto rep = sg::truncation_effect_estimate(s, 2.0, 10000, 5);
  EXPECT_NEAR(rep.beta, 32.0, 1e-12);
  ASSERT_EQ(rep.part1.size(), 1u);
  EXPECT_NEAR(rep.part1[0].mean, 0.25, 0.02);
  EXPECT_NEAR(rep.part1[0].bound, 1.0 / 16.0, 1e-12);
  EXPECT_TRUE(rep.part1[0].pass);
  ASSERT_EQ(rep.part2.size(), 1u);
  EXPECT_NEAR(rep.part2[0].mean, 1.0, 0.1);
  EXPECT_TRUE(rep.part2[0].pass);
  EXPECT_TRUE(rep.pass);
}

TEST(Truncation, SampleFloorEnforced) {
  sg::Spectrum s = sg::decompose(sg::generate(sg::GraphFamilySpec::complete(4)));
  EXPECT_THROW(sg::truncation_effect_estimate(s, 2.0, 50, 1),
               std::invalid_argument);
  EXPECT_THROW(sg::truncation_effect_estimate(s, 0.0, 1000, 1),
               std::invalid_argument);
}

TEST(Truncation, DesignatedCorpusPasses) {
  for (const auto& [entry, threshold] : sg::truncation_corpus()) {
    sg::Spectrum s = sg::decompose(entry.graph);
    auto rep = sg::truncation_effect_estimate(s, threshold, 2000, 11);
    EXPECT_TRUE(rep.pass) << entry.name;
  }
}
