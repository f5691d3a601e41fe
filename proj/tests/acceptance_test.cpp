// Acceptance suite: one test per criterion, each printing a pass/fail line.
// The corpus is decomposed once and shared; every tolerance is pinned here.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "specgraph/cluster_edit.hpp"
#include "specgraph/corpus.hpp"
#include "specgraph/increment.hpp"
#include "specgraph/probe.hpp"
#include "specgraph/recursion.hpp"
#include "specgraph/structure.hpp"
#include "specgraph/suites.hpp"
#include "specgraph/surplus.hpp"

namespace sg = specgraph;
namespace fs = std::filesystem;

namespace {

int workers() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 2;
}

const std::vector<sg::AnalyzedGraph>& corpus() {
  static const std::vector<sg::AnalyzedGraph> c =
      sg::analyze_corpus(sg::standard_corpus(), workers());
  return c;
}

void report_line(int criterion, const std::string& label) {
  bool failed = ::testing::Test::HasFailure();
  std::cout << (failed ? "[FAIL]" : "[PASS]") << " criterion " << criterion
            << ": " << label << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

TEST(Acceptance, Criterion1SpectralIdentities) {
  auto start = std::chrono::steady_clock::now();
  auto raw = sg::standard_corpus();
  ASSERT_GE(raw.size(), 300u);
  std::atomic<int> failures{0};
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next.fetch_add(1); i < static_cast<int>(raw.size());
         i = next.fetch_add(1)) {
      const auto& entry = raw[static_cast<std::size_t>(i)];
      sg::Spectrum s = sg::decompose(entry.graph);
      if (std::abs(s.lambdas.sum()) > 1e-6) ++failures;
      if (std::abs(s.lambdas.squaredNorm() - 2.0 * s.m) > 1e-6 * s.n)
        ++failures;
      if (!entry.circulant.empty()) {
        auto oracle = sg::circulant_eigenvalues(s.n, entry.circulant);
        std::sort(oracle.begin(), oracle.end(), std::greater<double>());
        for (int k = 0; k < s.n; ++k)
          if (std::abs(oracle[static_cast<std::size_t>(k)] - s.lambdas[k]) >
              1e-8) {
            ++failures;
            break;
          }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers(); ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  EXPECT_EQ(failures.load(), 0);
  double elapsed = seconds_since(start);
  EXPECT_LT(elapsed, 120.0);
  report_line(1, "spectral identities and circulant oracle on " +
                     std::to_string(raw.size()) + " graphs (" +
                     std::to_string(elapsed) + " s)");
}

TEST(Acceptance, Criterion2HadamardIdentity) {
  std::atomic<long long> failures{0};
  std::atomic<int> next{0};
  const auto& c = corpus();
  auto work = [&] {
    for (int i = next.fetch_add(1); i < static_cast<int>(c.size());
         i = next.fetch_add(1)) {
      const auto& a = c[static_cast<std::size_t>(i)];
      const std::uint64_t seed = sg::rng::mix(7, static_cast<std::uint64_t>(i));
      for (int p = 0; p < 100; ++p) {
        Eigen::VectorXd q(a.spectrum.n);
        for (int v = 0; v < a.spectrum.n; ++v)
          q[v] = sg::rng::normal(
              seed, static_cast<std::uint64_t>(p) * a.spectrum.n + v);
        if (!sg::hadamard_identity_check(a.entry.graph, a.spectrum, q, 1e-6)
                 .pass)
          ++failures;
        sg::ProbeVector pv;
        pv.entries = std::move(q);
        sg::ProbeVector clipped = sg::clip(pv, 2.0);
        if (!sg::hadamard_identity_check(a.entry.graph, a.spectrum, clipped,
                                         1e-6)
                 .pass)
          ++failures;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers(); ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  EXPECT_EQ(failures.load(), 0);
  report_line(2, "Hadamard identity, 100 probes per graph, clipped and raw");
}

TEST(Acceptance, Criterion3KeyRecursion) {
  long long failures = 0, checked = 0;
  for (const auto& a : corpus()) {
    sg::ThresholdProfile prof(a.spectrum);
    auto rep = sg::verify_key_recursion(
        prof, a.spectrum.lambda_n(),
        sg::default_threshold_grid(prof, sg::key_recursion_floor(a.spectrum)));
    for (const auto& row : rep.rows) {
      if (row.status == sg::CheckStatus::Fail) ++failures;
      if (row.status != sg::CheckStatus::NotApplicable) ++checked;
    }
  }
  EXPECT_EQ(failures, 0);
  EXPECT_GT(checked, 0);
  report_line(3, "key recursion S_T^2 <= 2n S_{T^2/4n} at " +
                     std::to_string(checked) + " valid grid points");
}

TEST(Acceptance, Criterion4SurplusRecursion) {
  long long failures = 0, gated = 0;
  for (const auto& a : corpus()) {
    sg::ThresholdProfile prof(a.spectrum);
    auto rep = sg::verify_surplus_recursion(
        prof, sg::dual_upper(a.spectrum).value,
        sg::default_threshold_grid(
            prof, sg::surplus_recursion_floor(a.spectrum.n)));
    if (rep.overall == sg::CheckStatus::Fail) ++failures;
    if (rep.overall == sg::CheckStatus::Pass) ++gated;
  }
  EXPECT_EQ(failures, 0);
  EXPECT_GT(gated, 0);
  report_line(4, "surplus recursion on the " + std::to_string(gated) +
                     " graphs passing its gate");
}

TEST(Acceptance, Criterion5CertificateSandwich) {
  for (const auto& a : corpus()) {
    const auto& g = a.entry.graph;
    if (g.n() > 20) continue;
    sg::Cut cut = sg::maxcut_exact(g);
    double sp = cut.surplus(g);
    double floor = std::max(sg::edwards_floor(g).value,
                            sg::degeneracy_floor(g).value);
    EXPECT_LE(floor, sp + 1e-6) << a.entry.name;
    EXPECT_LE(sp, sg::mixing_upper(g, a.spectrum).value + 1e-6)
        << a.entry.name;
  }
  for (const auto& a : corpus()) {
    sg::SdpResult sdp = sg::sdp_lower(a.entry.graph, a.spectrum, {.seed = 7});
    EXPECT_LE(sg::energy_certificate(a.spectrum).value,
              sdp.certificate.value + 1e-6)
        << a.entry.name;
    EXPECT_LE(sdp.certificate.value, sg::dual_upper(a.spectrum).value + 1e-6)
        << a.entry.name;
  }
  // spot values
  sg::Graph k4 = sg::generate(sg::GraphFamilySpec::complete(4));
  EXPECT_DOUBLE_EQ(sg::maxcut_exact(k4).surplus(k4), 1.0);
  sg::Graph c5 = sg::generate(sg::GraphFamilySpec::circulant(5, {1}));
  EXPECT_DOUBLE_EQ(sg::maxcut_exact(c5).surplus(c5), 1.5);
  sg::Graph pet = sg::petersen();
  EXPECT_DOUBLE_EQ(sg::maxcut_exact(pet).surplus(pet), 4.5);
  double sp_star_k4 = sg::sdp_lower(k4, {.seed = 7}).certificate.value;
  EXPECT_GE(sp_star_k4, 1.5 - 1e-6);
  EXPECT_LE(sp_star_k4, 2.0 + 1e-6);
  report_line(5, "certificate sandwich and spot surpluses");
}

TEST(Acceptance, Criterion6CubicCertificate) {
  std::atomic<int> failures{0};
  std::atomic<int> next{0};
  const auto& c = corpus();
  auto work = [&] {
    for (int i = next.fetch_add(1); i < static_cast<int>(c.size());
         i = next.fetch_add(1)) {
      const auto& a = c[static_cast<std::size_t>(i)];
      sg::SdpResult sdp = sg::sdp_lower(a.entry.graph, a.spectrum, {.seed = 7});
      double ln = std::max(-a.spectrum.lambda_n(), 0.0);
      if (ln * ln * ln >
          2.0 * a.spectrum.n * sdp.certificate.value + 1e-6)
        ++failures;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers(); ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  EXPECT_EQ(failures.load(), 0);
  report_line(6, "(-lambda_n)^3 <= 2n sdp_lower across the corpus");
}

TEST(Acceptance, Criterion7Flatness) {
  for (const auto& a : corpus()) {
    sg::FlatnessReport rep = sg::flatness_check(a.spectrum, 1e-8);
    EXPECT_TRUE(rep.pass(1e-8)) << a.entry.name << " excess "
                                << rep.max_excess;
  }
  report_line(7, "eigenvector flatness across the corpus");
}

TEST(Acceptance, Criterion8TruncationMonteCarlo) {
  auto start = std::chrono::steady_clock::now();
  auto designated = sg::truncation_corpus();
  ASSERT_EQ(designated.size(), 20u);
  std::atomic<int> failures{0};
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next.fetch_add(1); i < static_cast<int>(designated.size());
         i = next.fetch_add(1)) {
      const auto& [entry, threshold] =
          designated[static_cast<std::size_t>(i)];
      sg::Spectrum s = sg::decompose(entry.graph);
      auto rep = sg::truncation_effect_estimate(
          s, threshold, 10000,
          sg::rng::mix(7, 0x616363ULL + static_cast<std::uint64_t>(i)));
      if (!rep.pass) ++failures;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers(); ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  EXPECT_EQ(failures.load(), 0);
  double elapsed = seconds_since(start);
  EXPECT_LT(elapsed, 300.0);
  report_line(8, "truncation moment bounds at 4 sigma, 1e4 samples (" +
                     std::to_string(elapsed) + " s)");
}

TEST(Acceptance, Criterion9StructureDichotomy) {
  const double delta = 1e-4;
  const double mu = std::cbrt(delta);
  ASSERT_LT(mu, 0.1);
  for (const auto& a : corpus()) {
    sg::StructureParams params;
    params.gamma = 0.25;
    params.delta = delta;
    params.eta = 0.05;
    params.seed = 7;
    sg::StructureVerdict verdict =
        sg::structure_verdict(a.entry.graph, a.spectrum, params);
    if (verdict.outcome == sg::StructureOutcome::HypothesisViolated) continue;
    if (verdict.outcome == sg::StructureOutcome::EigenWitness) {
      ASSERT_TRUE(verdict.witness.has_value()) << a.entry.name;
      EXPECT_GE(verdict.witness->rayleigh, a.spectrum.lambda_n() - 1e-6)
          << a.entry.name;
    } else {
      // exhaustive: no cherry on three good pairs (the verdict scan is the
      // exhaustive search; re-assert its conclusion)
      EXPECT_EQ(verdict.good_cherries, 0) << a.entry.name;
    }
  }
  // the blow-up family always witnesses -(m+3)/3
  for (int m = 5; m <= 20; ++m) {
    sg::Graph g = sg::cherry_blowup(m);
    sg::Spectrum s = sg::decompose(g);
    sg::EmbeddingVectors emb = sg::embedding_vectors(s, 0.25);
    sg::PartPartition parts = sg::partition_by_embedding(emb, 0.05);
    sg::PairClassification classes = sg::classify_pairs(g, parts, mu);
    auto witness = sg::find_eigen_witness(g, parts, classes);
    ASSERT_TRUE(witness.has_value()) << "blowup " << m;
    EXPECT_LE(witness->rayleigh, -(static_cast<double>(m) + 3.0) / 3.0 + 1e-8)
        << "blowup " << m;
  }
  report_line(9, "structure dichotomy and blow-up witnesses");
}

TEST(Acceptance, Criterion10ClusterEditOracle) {
  for (const auto& a : corpus()) {
    if (a.entry.graph.n() > 12) continue;
    auto exact = sg::cluster_edit_exact(a.entry.graph);
    auto pivot = sg::cluster_edit_pivot(a.entry.graph, 7, 32);
    EXPECT_GE(pivot.edit_count, exact.edit_count) << a.entry.name;
  }
  for (const auto& sizes :
       std::vector<std::vector<int>>{{4, 4}, {3, 2}, {5, 4, 3}, {12}})
    EXPECT_EQ(sg::cluster_edit_exact(
                  sg::generate(sg::GraphFamilySpec::union_cliques(sizes)))
                  .edit_count,
              0);
  EXPECT_EQ(sg::cluster_edit_exact(sg::parse_edge_list("0 1\n1 2\n"))
                .edit_count,
            1);
  // Stated expectation: 2. Exhaustive enumeration over all 52 partitions of
  // five vertices yields 3 (best partitions {ab}{cd}{e} and {abc}{de} each
  // leave three disagreeing pairs), so this check cannot pass as stated.
  sg::Graph c5 = sg::generate(sg::GraphFamilySpec::circulant(5, {1}));
  EXPECT_EQ(sg::cluster_edit_exact(c5).edit_count, 2)
      << "exhaustive enumeration gives 3; the stated value 2 is not "
         "attainable for the 5-cycle";
  report_line(10, "cluster-edit oracle (5-cycle spot value stated as 2; "
                  "enumeration yields 3)");
}

TEST(Acceptance, Criterion11IncrementLoop) {
  for (const auto& a : corpus()) {
    const auto& g = a.entry.graph;
    long long sum = 0;
    for (int v = 0; v < g.n(); ++v) {
      long long twice = 0;
      for (int u = 0; u < g.n(); ++u)
        if (g.has_edge(v, u)) twice += g.common_neighbors(v, u);
      sum += twice;
    }
    EXPECT_EQ(sum, 6 * sg::triangle_count(g)) << a.entry.name;
    if (g.m() > 0) {
      sg::IncrementTrace trace = sg::increment_loop(g, 0.3);
      EXPECT_TRUE(trace.potential_monotone) << a.entry.name;
    }
  }
  std::atomic<int> hits{0};
  std::atomic<int> bad_potential{0};
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next.fetch_add(1); i < 100; i = next.fetch_add(1)) {
      int k = 10 + i % 11;
      sg::Graph g = sg::planted_clique(
          120, k, 0.02, sg::rng::mix(7, 0x706cULL + static_cast<std::uint64_t>(i)));
      sg::IncrementTrace trace = sg::increment_loop(g, 0.3, {}, 64);
      if (trace.terminal == sg::IncrementTerminal::DensityTarget) ++hits;
      if (!trace.potential_monotone) ++bad_potential;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers(); ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  EXPECT_EQ(bad_potential.load(), 0);
  EXPECT_GE(hits.load(), 95);
  report_line(11, "densest-neighborhood identity, monotone potential, " +
                      std::to_string(hits.load()) +
                      "/100 planted cliques recovered");
}

TEST(Acceptance, Criterion12Determinism) {
  fs::path dir = fs::temp_directory_path() / "specgraph_acceptance";
  fs::create_directories(dir);
  fs::path out1 = dir / "all_run1.json";
  fs::path out2 = dir / "all_run2.json";
  std::string base = std::string(SPECGRAPH_CLI_PATH) +
                     " corpus --suite all --seed 7 --workers " +
                     std::to_string(workers()) + " --out ";
  int rc1 = std::system((base + out1.string() + " > /dev/null").c_str());
  int rc2 = std::system((base + out2.string() + " > /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(rc1), 0);
  EXPECT_EQ(WEXITSTATUS(rc2), 0);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  std::string first = slurp(out1), second = slurp(out2);
  ASSERT_FALSE(first.empty());
  EXPECT_EQ(first, second);
  report_line(12, "byte-identical corpus reports across repeated runs");
}
