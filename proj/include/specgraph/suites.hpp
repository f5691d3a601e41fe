#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "specgraph/corpus.hpp"
#include "specgraph/increment.hpp"
#include "specgraph/probe.hpp"
#include "specgraph/recursion.hpp"
#include "specgraph/serialize.hpp"
#include "specgraph/spectrum.hpp"
#include "specgraph/structure.hpp"
#include "specgraph/surplus.hpp"

namespace specgraph {

/// Effective constants for a corpus run. The named presets:
///   desk:  kappa 1e-2, eta 0.05, density target 0.3
///   paper: kappa 1e-10, density target 1e-100 (with the paper's exponents
///          rho = 1/1000, c = 1/99, gamma = 1/200 recorded; desk-vacuous)
struct SuiteParams {
  std::string preset = "desk";
  std::uint64_t seed = 7;
  int workers = 1;
  double kappa = 1e-2;
  double eta = 0.05;
  double gamma = 0.25;
  double delta = 1e-4;
  double mu = 0.0;  // <= 0: delta^{1/3}
  double density_target = 0.3;
  int step_cap = 64;
  int mc_samples = 10000;
  int probes_per_graph = 100;
  int local_restarts = 32;
  int pivot_seeds = 32;
  int maxcut_cap = 26;
};

inline SuiteParams desk_preset() { return SuiteParams{}; }

inline SuiteParams paper_preset() {
  SuiteParams p;
  p.preset = "paper";
  p.kappa = 1e-10;
  p.density_target = 1e-100;
  return p;
}

inline Json preset_table(const SuiteParams& p) {
  Json j;
  j["preset"] = p.preset;
  j["seed"] = p.seed;
  j["kappa"] = p.kappa;
  j["eta"] = p.eta;
  j["gamma"] = p.gamma;
  j["delta"] = p.delta;
  j["mu"] = p.mu > 0.0 ? p.mu : std::cbrt(p.delta);
  j["densityTarget"] = p.density_target;
  j["stepCap"] = p.step_cap;
  j["mcSamples"] = p.mc_samples;
  j["probesPerGraph"] = p.probes_per_graph;
  j["localRestarts"] = p.local_restarts;
  j["pivotSeeds"] = p.pivot_seeds;
  j["maxcutCap"] = p.maxcut_cap;
  j["rho"] = 1.0 / 1000.0;           // density exponent of the increment gate
  j["c"] = kSurplusRecursionC;       // surplus recursion exponent
  j["gammaIncrement"] = 1.0 / 200.0; // surplus gate exponent in the increment
  return j;
}

struct AnalyzedGraph {
  CorpusEntry entry;
  Spectrum spectrum;
};

namespace detail {

// Ordered parallel map: out[i] = fn(i), fanned out over `workers` threads.
inline void parallel_for(int count, int workers,
                         const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  int spawn = std::min(workers, count);
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline std::vector<AnalyzedGraph> analyze_corpus(
    std::vector<CorpusEntry> corpus, int workers = 1) {
  std::vector<AnalyzedGraph> out(corpus.size());
  detail::parallel_for(
      static_cast<int>(corpus.size()), workers, [&](int i) {
        auto& slot = out[static_cast<std::size_t>(i)];
        slot.entry = std::move(corpus[static_cast<std::size_t>(i)]);
        slot.spectrum = decompose(slot.entry.graph);
      });
  return out;
}

struct SuiteReport {
  std::string suite;
  Json rows = Json::array();
  long long pass = 0;
  long long fail = 0;
  long long not_applicable = 0;
  Json extra;  // suite-specific summary fields

  bool ok() const { return fail == 0; }
  void tally(CheckStatus s) {
    switch (s) {
      case CheckStatus::Pass: ++pass; break;
      case CheckStatus::Fail: ++fail; break;
      case CheckStatus::NotApplicable: ++not_applicable; break;
    }
  }
  void tally(bool pass_flag) {
    tally(pass_flag ? CheckStatus::Pass : CheckStatus::Fail);
  }
};

// ---------------------------------------------------------------------------
// identities: classical identities, circulant oracle, flatness, energy
// relation, spectral-vs-combinatorial triangles, Gram mass cross-check
// ---------------------------------------------------------------------------
inline SuiteReport run_identities_suite(const std::vector<AnalyzedGraph>& corpus,
                                        const SuiteParams& params) {
  SuiteReport rep;
  rep.suite = "identities";
  std::vector<Json> rows(corpus.size());
  std::vector<int> fails(corpus.size(), 0);
  detail::parallel_for(
      static_cast<int>(corpus.size()), params.workers, [&](int idx) {
        const auto& g = corpus[static_cast<std::size_t>(idx)].entry.graph;
        const auto& s = corpus[static_cast<std::size_t>(idx)].spectrum;
        const double n = static_cast<double>(s.n);
        Json row;
        row["graph"] = corpus[static_cast<std::size_t>(idx)].entry.name;
        row["n"] = s.n;
        row["m"] = s.m;
        bool ok = true;

        const double trace_err = std::abs(s.lambdas.sum());
        const double sq_err =
            std::abs(s.lambdas.squaredNorm() - 2.0 * static_cast<double>(s.m));
        row["traceErr"] = trace_err;
        row["squareSumErr"] = sq_err;
        ok &= trace_err <= 1e-6 && sq_err <= 1e-6 * n;

        if (!corpus[static_cast<std::size_t>(idx)].entry.circulant.empty()) {
          auto closed = circulant_eigenvalues(
              s.n, corpus[static_cast<std::size_t>(idx)].entry.circulant);
          std::sort(closed.begin(), closed.end(), std::greater<double>());
          double worst = 0.0;
          for (int i = 0; i < s.n; ++i)
            worst = std::max(
                worst,
                std::abs(closed[static_cast<std::size_t>(i)] - s.lambdas[i]));
          row["circulantOracleErr"] = worst;
          ok &= worst <= 1e-8;
        }

        FlatnessReport flat = flatness_check(s);
        row["flatnessExcess"] = flat.max_excess;
        ok &= flat.pass(1e-8);

        if (s.lambda_n() < 0.0) {
          bool energy_ok = energy(s) <= 2.0 * n * (-s.lambda_n()) + 1e-6 * n;
          row["energyRelation"] = energy_ok;
          ok &= energy_ok;
        }

        const double tri_err =
            std::abs(triangle_count_spectral(s) -
                     static_cast<double>(triangle_count(g)));
        row["triangleErr"] = tri_err;
        ok &= tri_err <= 1e-6;

        // S_T monotone on a small threshold ladder
        ThresholdProfile prof(s);
        bool monotone = true;
        double prev = prof.threshold_sum(0.0);
        for (int step = 1; step <= 8; ++step) {
          double t = s.lambda_1() * static_cast<double>(step) / 8.0;
          double cur = prof.threshold_sum(std::max(t, 0.0));
          if (cur > prev + 1e-9) monotone = false;
          prev = cur;
        }
        row["thresholdMonotone"] = monotone;
        ok &= monotone;

        if (s.n <= 64) {
          EmbeddingVectors emb = embedding_vectors(s, params.gamma);
          Eigen::MatrixXd diff = -adjacency_matrix(g);
          for (int i : emb.level_set)
            diff += s.lambdas[i] * s.vectors.col(i) *
                    s.vectors.col(i).transpose();
          double frob = diff.squaredNorm();
          double mass = residual_gram_mass(s, emb.level_set);
          row["gramMassErr"] = std::abs(frob - mass);
          ok &= std::abs(frob - mass) <=
                default_residual_tol(s.n, s.lambda_1()) * n;
        }

        row["pass"] = ok;
        rows[static_cast<std::size_t>(idx)] = std::move(row);
        fails[static_cast<std::size_t>(idx)] = ok ? 0 : 1;
      });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rep.rows.push_back(std::move(rows[i]));
    rep.tally(fails[i] == 0);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// recursion: key and surplus recursions on default grids, recursion solver,
// top-concentration (tallied apart: the claim is asymptotic)
// ---------------------------------------------------------------------------
inline SuiteReport run_recursion_suite(const std::vector<AnalyzedGraph>& corpus,
                                       const SuiteParams& params) {
  SuiteReport rep;
  rep.suite = "recursion";
  std::vector<Json> rows(corpus.size());
  std::vector<std::array<int, 3>> tallies(corpus.size());
  std::vector<std::array<long long, 3>> top_conc(corpus.size(),
                                                 {0, 0, 0});
  detail::parallel_for(
      static_cast<int>(corpus.size()), params.workers, [&](int idx) {
        const auto& s = corpus[static_cast<std::size_t>(idx)].spectrum;
        ThresholdProfile prof(s);
        Json row;
        row["graph"] = corpus[static_cast<std::size_t>(idx)].entry.name;
        row["n"] = s.n;
        int pass = 0, fail = 0, na = 0;
        auto count = [&](CheckStatus st) {
          if (st == CheckStatus::Pass) ++pass;
          else if (st == CheckStatus::Fail) ++fail;
          else ++na;
        };

        RecursionReport key = verify_key_recursion(
            prof, s.lambda_n(),
            default_threshold_grid(prof, key_recursion_floor(s)));
        row["key"] = to_string(key.overall);
        row["keyWorstRatio"] = key.worst_ratio;
        count(key.overall);

        double sp_star_upper = dual_upper(s).value;
        RecursionReport surplus = verify_surplus_recursion(
            prof, sp_star_upper,
            default_threshold_grid(prof, surplus_recursion_floor(s.n)));
        row["surplus"] = to_string(surplus.overall);
        row["surplusWorstRatio"] = surplus.worst_ratio;
        count(surplus.overall);

        RecursionParams solver_params;
        solver_params.p = 0.25 - 0.01;
        solver_params.q = 1.25 - 0.01;
        solver_params.r = 0.75 - 0.01;
        solver_params.c = 4.0;
        solver_params.n = s.n;
        SolverCheck solver;
        const double n = static_cast<double>(s.n);
        double h_lo = std::pow(n, solver_params.p + solver_params.q - 1.0);
        if (h_lo <= n) {
          solver = verify_solver_against_spectrum(
              s, solver_params, std::min(n, std::max(h_lo, n / 2.0)));
        }
        row["solver"] = to_string(solver.status);
        if (!solver.note.empty()) row["solverNote"] = solver.note;
        count(solver.status);

        TopConcentrationCheck top = check_top_concentration(s, 0.009, 0.009);
        row["topConcentration"] = to_string(top.status);
        auto& tc = top_conc[static_cast<std::size_t>(idx)];
        if (top.status == CheckStatus::Pass) tc[0] = 1;
        else if (top.status == CheckStatus::Fail) tc[1] = 1;
        else tc[2] = 1;

        row["pass"] = fail == 0;
        rows[static_cast<std::size_t>(idx)] = std::move(row);
        tallies[static_cast<std::size_t>(idx)] = {pass, fail, na};
      });
  std::array<long long, 3> tc_total{0, 0, 0};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rep.rows.push_back(std::move(rows[i]));
    rep.pass += tallies[i][0];
    rep.fail += tallies[i][1];
    rep.not_applicable += tallies[i][2];
    for (int k = 0; k < 3; ++k) tc_total[static_cast<std::size_t>(k)] +=
        top_conc[i][static_cast<std::size_t>(k)];
  }
  // asymptotic claim, reported separately from the defect tally
  rep.extra["topConcentration"] = {{"pass", tc_total[0]},
                                   {"fail", tc_total[1]},
                                   {"notApplicable", tc_total[2]}};
  return rep;
}

// ---------------------------------------------------------------------------
// probe: Hadamard identity on clipped and unclipped probes, Gaussian moment
// sanity, truncation-effect Monte Carlo on the designated corpus
// ---------------------------------------------------------------------------
inline SuiteReport run_probe_suite(const std::vector<AnalyzedGraph>& corpus,
                                   const SuiteParams& params) {
  SuiteReport rep;
  rep.suite = "probe";
  std::vector<Json> rows(corpus.size());
  std::vector<int> fails(corpus.size(), 0);
  detail::parallel_for(
      static_cast<int>(corpus.size()), params.workers, [&](int idx) {
        const auto& entry = corpus[static_cast<std::size_t>(idx)].entry;
        const auto& s = corpus[static_cast<std::size_t>(idx)].spectrum;
        Json row;
        row["graph"] = entry.name;
        row["n"] = s.n;
        int checked = 0, failed = 0;
        const std::uint64_t graph_seed =
            rng::mix(params.seed, static_cast<std::uint64_t>(idx));
        for (int p = 0; p < params.probes_per_graph; ++p) {
          Eigen::VectorXd q(s.n);
          for (int v = 0; v < s.n; ++v)
            q[v] = rng::normal(graph_seed,
                               static_cast<std::uint64_t>(p) * s.n + v);
          auto check = hadamard_identity_check(entry.graph, s, q);
          ++checked;
          failed += check.pass ? 0 : 1;
          // clipped route: clamp at beta = 2 via the probe machinery
          ProbeVector pv;
          pv.entries = q;
          auto clipped = clip(pv, 2.0);
          auto check2 = hadamard_identity_check(entry.graph, s, clipped);
          ++checked;
          failed += check2.pass ? 0 : 1;
        }
        row["probes"] = checked;
        row["identityFailures"] = failed;
        row["pass"] = failed == 0;
        rows[static_cast<std::size_t>(idx)] = std::move(row);
        fails[static_cast<std::size_t>(idx)] = failed == 0 ? 0 : 1;
      });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rep.rows.push_back(std::move(rows[i]));
    rep.tally(fails[i] == 0);
  }

  // truncation-effect Monte Carlo over its designated graphs
  auto designated = truncation_corpus();
  std::vector<Json> mc_rows(designated.size());
  std::vector<int> mc_fails(designated.size(), 0);
  detail::parallel_for(
      static_cast<int>(designated.size()), params.workers, [&](int i) {
        const auto& [entry, threshold] = designated[static_cast<std::size_t>(i)];
        Spectrum s = decompose(entry.graph);
        TruncationReport trep = truncation_effect_estimate(
            s, threshold, params.mc_samples,
            rng::mix(params.seed, 0x7472756eULL + static_cast<std::uint64_t>(i)));
        Json row;
        row["graph"] = entry.name;
        row["T"] = threshold;
        row["beta"] = trep.beta;
        row["pairs"] = static_cast<long long>(trep.part1.size());
        row["part2Indices"] = static_cast<long long>(trep.part2.size());
        row["pass"] = trep.pass;
        mc_rows[static_cast<std::size_t>(i)] = std::move(row);
        mc_fails[static_cast<std::size_t>(i)] = trep.pass ? 0 : 1;
      });
  Json mc = Json::array();
  for (std::size_t i = 0; i < mc_rows.size(); ++i) {
    mc.push_back(std::move(mc_rows[i]));
    rep.tally(mc_fails[i] == 0);
  }
  rep.extra["truncation"] = std::move(mc);
  return rep;
}

// ---------------------------------------------------------------------------
// surplus: certificate sandwiches on every graph, exact oracle comparisons
// in range, local-search statistical acceptance
// ---------------------------------------------------------------------------
inline SuiteReport run_surplus_suite(const std::vector<AnalyzedGraph>& corpus,
                                     const SuiteParams& params) {
  SuiteReport rep;
  rep.suite = "surplus";
  std::vector<Json> rows(corpus.size());
  std::vector<int> fails(corpus.size(), 0);
  detail::parallel_for(
      static_cast<int>(corpus.size()), params.workers, [&](int idx) {
        const auto& entry = corpus[static_cast<std::size_t>(idx)].entry;
        const auto& g = entry.graph;
        const auto& s = corpus[static_cast<std::size_t>(idx)].spectrum;
        Json row;
        row["graph"] = entry.name;
        row["n"] = g.n();
        bool ok = true;

        SurplusCertificate energy_c = energy_certificate(s);
        SurplusCertificate cubic_c = cubic_certificate(s);
        SurplusCertificate dual_c = dual_upper(s);
        SurplusCertificate mix_c = mixing_upper(g, s);
        SurplusCertificate edw_c = edwards_floor(g);
        SurplusCertificate deg_c = degeneracy_floor(g);
        SdpResult sdp = sdp_lower(g, s, {.seed = params.seed});
        const double tol = 1e-6;

        row["energyLower"] = energy_c.value;
        row["cubicLower"] = cubic_c.value;
        row["sdpLower"] = sdp.certificate.value;
        row["dualUpper"] = dual_c.value;
        ok &= energy_c.value <= sdp.certificate.value + tol;
        ok &= cubic_c.value <= sdp.certificate.value + tol;
        ok &= sdp.certificate.value <= dual_c.value + tol;
        // ascent iterates must be nondecreasing
        for (std::size_t i = 1; i < sdp.values.size(); ++i)
          ok &= sdp.values[i] >= sdp.values[i - 1] - 1e-12;
        // (-lambda_n)^3 <= 2n sdp_lower
        double ln = std::max(-s.lambda_n(), 0.0);
        ok &= ln * ln * ln <=
              2.0 * static_cast<double>(g.n()) * sdp.certificate.value + tol;

        if (g.n() <= 64) {
          ok &= check_certificate(energy_c, g);
          ok &= check_certificate(cubic_c, g);
          ok &= check_certificate(sdp.certificate, g);
          ok &= check_certificate(dual_c, g);
        }

        if (g.n() <= 20) {
          Cut exact = maxcut_exact(g, params.maxcut_cap);
          double sp = exact.surplus(g);
          row["spExact"] = sp;
          ok &= edw_c.value <= sp + tol;
          ok &= deg_c.value <= sp + tol;
          ok &= sp <= mix_c.value + tol;
          ok &= sp <= sdp.certificate.value + tol;  // sp <= sp*
          Cut local = maxcut_local(
              g, rng::mix(params.seed, static_cast<std::uint64_t>(idx)),
              params.local_restarts);
          row["mcLocal"] = local.cut_edges;
          ok &= local.cut_edges >= (g.m() + 1) / 2;
          ok &= local.cut_edges <= exact.cut_edges;
        }

        row["pass"] = ok;
        rows[static_cast<std::size_t>(idx)] = std::move(row);
        fails[static_cast<std::size_t>(idx)] = ok ? 0 : 1;
      });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rep.rows.push_back(std::move(rows[i]));
    rep.tally(fails[i] == 0);
  }

  // statistical acceptance: local search matches the exact oracle on at
  // least 95% of 200 random graphs with n <= 16
  int hits = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    CounterRng r(rng::mix(params.seed, 0x6c6f63ULL + static_cast<std::uint64_t>(t)));
    int n = 4 + static_cast<int>(r.next_below(13));
    double p = 0.2 + 0.3 * static_cast<double>(r.next_below(3));
    Graph g = generate(GraphFamilySpec::erdos_renyi(n, p, r.next_u64()));
    Cut exact = maxcut_exact(g);
    Cut local = maxcut_local(g, r.next_u64(), params.local_restarts);
    if (local.cut_edges == exact.cut_edges) ++hits;
  }
  rep.extra["localVsExact"] = {{"hits", hits}, {"trials", trials}};
  rep.tally(hits >= 95 * trials / 100);
  return rep;
}

// ---------------------------------------------------------------------------
// structure: verdict per graph, the witness/no-good-cherry dichotomy, the
// blow-up family witness values, cluster-edit oracle agreement
// ---------------------------------------------------------------------------
inline SuiteReport run_structure_suite(const std::vector<AnalyzedGraph>& corpus,
                                       const SuiteParams& params) {
  SuiteReport rep;
  rep.suite = "structure";
  std::vector<Json> rows(corpus.size());
  std::vector<int> fails(corpus.size(), 0);
  detail::parallel_for(
      static_cast<int>(corpus.size()), params.workers, [&](int idx) {
        const auto& entry = corpus[static_cast<std::size_t>(idx)].entry;
        const auto& g = entry.graph;
        const auto& s = corpus[static_cast<std::size_t>(idx)].spectrum;
        Json row;
        row["graph"] = entry.name;
        row["n"] = g.n();
        bool ok = true;

        StructureParams sp;
        sp.gamma = params.gamma;
        sp.delta = params.delta;
        sp.eta = params.eta;
        sp.mu = params.mu;
        sp.seed = rng::mix(params.seed, static_cast<std::uint64_t>(idx));
        sp.pivot_seeds = params.pivot_seeds;
        StructureVerdict verdict = structure_verdict(g, s, sp);
        row["outcome"] = to_string(verdict.outcome);
        // dichotomy: witness emitted or no cherry rides on three good pairs
        if (verdict.outcome == StructureOutcome::EigenWitness) {
          ok &= verdict.witness.has_value();
          ok &= verdict.witness->rayleigh >= s.lambda_n() - 1e-6;
        } else if (verdict.outcome == StructureOutcome::ClosenessEvidence) {
          ok &= verdict.good_cherries == 0;
          ok &= verdict.cherry_check != CheckStatus::Fail;
          if (verdict.edit_certificate) {
            row["editCount"] = verdict.edit_certificate->edit_count;
            ok &= edit_count_for_partition(
                      g, verdict.edit_certificate->partition) ==
                  verdict.edit_certificate->edit_count;
          }
        }
        if (verdict.census.hypothesis_ok)
          ok &= verdict.census.claim3 != CheckStatus::Fail;

        // the blow-up family must witness Rayleigh <= -(m+3)/3
        if (entry.name.rfind("blowup_", 0) == 0) {
          int m = g.n() / 3;
          EmbeddingVectors emb = embedding_vectors(s, params.gamma);
          PartPartition parts = partition_by_embedding(emb, params.eta);
          PairClassification classes = classify_pairs(
              g, parts, params.mu > 0.0 ? params.mu : std::cbrt(params.delta));
          auto witness = find_eigen_witness(g, parts, classes);
          bool hit = witness.has_value() &&
                     witness->rayleigh <=
                         -static_cast<double>(m + 3) / 3.0 + 1e-8;
          row["blowupWitness"] = hit;
          ok &= hit;
        }

        row["pass"] = ok;
        rows[static_cast<std::size_t>(idx)] = std::move(row);
        fails[static_cast<std::size_t>(idx)] = ok ? 0 : 1;
      });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rep.rows.push_back(std::move(rows[i]));
    rep.tally(fails[i] == 0);
  }

  // cluster-edit oracle agreement on small graphs
  int oracle_checked = 0, oracle_ok = 0;
  for (const auto& a : corpus) {
    if (a.entry.graph.n() > kClusterEditExactCap) continue;
    ++oracle_checked;
    ClusterEditResult exact = cluster_edit_exact(a.entry.graph);
    ClusterEditResult pivot =
        cluster_edit_pivot(a.entry.graph, params.seed, params.pivot_seeds);
    if (pivot.edit_count >= exact.edit_count &&
        edit_count_for_partition(a.entry.graph, exact.partition) ==
            exact.edit_count)
      ++oracle_ok;
  }
  rep.extra["clusterEditOracle"] = {{"checked", oracle_checked},
                                    {"ok", oracle_ok}};
  rep.tally(oracle_checked == oracle_ok);
  return rep;
}

// ---------------------------------------------------------------------------
// increment: densest-neighborhood identity, loop traces with the potential
// audit, the planted-clique success rate
// ---------------------------------------------------------------------------
inline SuiteReport run_increment_suite(const std::vector<AnalyzedGraph>& corpus,
                                       const SuiteParams& params) {
  SuiteReport rep;
  rep.suite = "increment";
  std::vector<Json> rows(corpus.size());
  std::vector<int> fails(corpus.size(), 0);
  detail::parallel_for(
      static_cast<int>(corpus.size()), params.workers, [&](int idx) {
        const auto& entry = corpus[static_cast<std::size_t>(idx)].entry;
        const auto& g = entry.graph;
        Json row;
        row["graph"] = entry.name;
        row["n"] = g.n();
        bool ok = true;

        // sum_v 2 e(G[N(v)]) = 6 t(G), exactly
        long long sum = 0;
        for (int v = 0; v < g.n(); ++v) {
          long long twice = 0;
          for (int u = 0; u < g.n(); ++u)
            if (g.has_edge(v, u)) twice += g.common_neighbors(v, u);
          sum += twice;  // = 2 e(G[N(v)])
        }
        bool identity = sum == 6 * triangle_count(g);
        row["neighborhoodIdentity"] = identity;
        ok &= identity;

        if (g.m() > 0) {
          IncrementOptions opts;
          opts.kappa = params.kappa;
          IncrementTrace trace = increment_loop(g, params.density_target,
                                                opts, params.step_cap);
          row["terminal"] = to_string(trace.terminal);
          row["steps"] = static_cast<long long>(trace.steps.size());
          row["finalDensity"] = trace.final_density;
          row["potentialMonotone"] = trace.potential_monotone;
          ok &= trace.potential_monotone;
        }

        row["pass"] = ok;
        rows[static_cast<std::size_t>(idx)] = std::move(row);
        fails[static_cast<std::size_t>(idx)] = ok ? 0 : 1;
      });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rep.rows.push_back(std::move(rows[i]));
    rep.tally(fails[i] == 0);
  }

  // planted-clique corpus: K_k over noise, k = 10..20, 100 seeded instances
  const int instances = 100;
  std::vector<int> hit(instances, 0);
  detail::parallel_for(instances, params.workers, [&](int i) {
    int k = 10 + i % 11;
    Graph g = planted_clique(
        120, k, 0.02, rng::mix(params.seed, 0x706cULL + static_cast<std::uint64_t>(i)));
    IncrementOptions opts;
    opts.kappa = params.kappa;
    IncrementTrace trace =
        increment_loop(g, params.density_target, opts, params.step_cap);
    hit[static_cast<std::size_t>(i)] =
        trace.terminal == IncrementTerminal::DensityTarget &&
        trace.potential_monotone;
  });
  int hits = 0;
  for (int h : hit) hits += h;
  rep.extra["plantedClique"] = {{"hits", hits}, {"instances", instances}};
  rep.tally(hits >= 95 * instances / 100);
  return rep;
}

inline SuiteReport run_suite(const std::string& name,
                             const std::vector<AnalyzedGraph>& corpus,
                             const SuiteParams& params) {
  if (name == "identities") return run_identities_suite(corpus, params);
  if (name == "recursion") return run_recursion_suite(corpus, params);
  if (name == "probe") return run_probe_suite(corpus, params);
  if (name == "surplus") return run_surplus_suite(corpus, params);
  if (name == "structure") return run_structure_suite(corpus, params);
  if (name == "increment") return run_increment_suite(corpus, params);
  throw std::invalid_argument("unknown suite: " + name);
}

inline Json suite_report_json(const SuiteReport& rep) {
  Json j;
  j["suite"] = rep.suite;
  j["rows"] = rep.rows;
  Json summary;
  summary["pass"] = rep.pass;
  summary["fail"] = rep.fail;
  summary["notApplicable"] = rep.not_applicable;
  if (!rep.extra.is_null())
    for (auto it = rep.extra.begin(); it != rep.extra.end(); ++it)
      summary[it.key()] = it.value();
  j["summary"] = std::move(summary);
  return j;
}

}  // namespace specgraph
