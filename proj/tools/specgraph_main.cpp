// Command-line front door: generate graphs, run any analysis on an edge
// list, or evaluate the whole corpus suite. Reports are JSON (or CSV row
// mirrors) and byte-identical for identical configurations.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "specgraph/cluster_edit.hpp"
#include "specgraph/corpus.hpp"
#include "specgraph/increment.hpp"
#include "specgraph/probe.hpp"
#include "specgraph/recursion.hpp"
#include "specgraph/serialize.hpp"
#include "specgraph/spectrum.hpp"
#include "specgraph/structure.hpp"
#include "specgraph/suites.hpp"
#include "specgraph/surplus.hpp"

namespace {

constexpr const char* kTool = "specgraph";
constexpr const char* kVersion = "0.1.0";

using specgraph::Json;

struct CommonOpts {
  std::string in_path;
  std::string out_path;
  std::string preset = "desk";
  std::string format = "json";
  std::vector<std::string> param_overrides;
  std::uint64_t seed = 7;
  int workers = 1;
};

specgraph::SuiteParams resolve_params(const CommonOpts& opts) {
  specgraph::SuiteParams p = opts.preset == "paper"
                                 ? specgraph::paper_preset()
                                 : specgraph::desk_preset();
  p.seed = opts.seed;
  p.workers = opts.workers;
  for (const std::string& kv : opts.param_overrides) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--param expects key=value, got " + kv);
    std::string key = kv.substr(0, eq);
    double value = std::stod(kv.substr(eq + 1));
    if (key == "kappa") p.kappa = value;
    else if (key == "eta") p.eta = value;
    else if (key == "gamma") p.gamma = value;
    else if (key == "delta") p.delta = value;
    else if (key == "mu") p.mu = value;
    else if (key == "densityTarget") p.density_target = value;
    else if (key == "stepCap") p.step_cap = static_cast<int>(value);
    else if (key == "mcSamples") p.mc_samples = static_cast<int>(value);
    else if (key == "probes") p.probes_per_graph = static_cast<int>(value);
    else if (key == "restarts") p.local_restarts = static_cast<int>(value);
    else if (key == "pivotSeeds") p.pivot_seeds = static_cast<int>(value);
    else if (key == "maxcutCap") p.maxcut_cap = static_cast<int>(value);
    else
      throw CLI::ValidationError("unknown --param key: " + key);
  }
  return p;
}

specgraph::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return specgraph::parse_edge_list(buf.str());
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << text;
}

// Envelope shared by every report: tool, version, preset table, rows,
// summary. Emission is deterministic (ordered keys, fixed float repr).
void emit_report(const CommonOpts& opts, const specgraph::SuiteParams& params,
                 Json rows, Json summary) {
  if (opts.format == "csv") {
    write_text(opts.out_path, specgraph::csv_from_rows(rows));
    return;
  }
  Json report;
  report["tool"] = kTool;
  report["version"] = kVersion;
  report["preset"] = opts.preset;
  report["params"] = specgraph::preset_table(params);
  report["rows"] = std::move(rows);
  report["summary"] = std::move(summary);
  write_text(opts.out_path, report.dump(2) + "\n");
}

int failures_to_exit(long long failures) { return failures > 0 ? 1 : 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph spectral-analysis toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--preset", opts.preset, "parameter preset (desk|paper)")
      ->check(CLI::IsMember({"desk", "paper"}));
  app.add_option("--seed", opts.seed, "base random seed");
  app.add_option("--workers", opts.workers, "corpus worker threads");
  app.add_option("--param", opts.param_overrides,
                 "override a preset entry, key=value");
  app.add_option("--out", opts.out_path, "output path (default stdout)");
  app.add_option("--format", opts.format, "report format (json|csv)")
      ->check(CLI::IsMember({"json", "csv"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named family graph");
  std::string family;
  int gen_n = 0, gen_r = 2, gen_a = 0, gen_b = 0, gen_q = 5, gen_k = 1;
  double gen_p = 0.5;
  std::vector<int> gen_sizes, gen_conns;
  gen->add_option("--family", family,
                  "complete|turan|union_cliques|complete_bipartite|"
                  "erdos_renyi|circulant|paley|complete_minus_clique")
      ->required();
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--r", gen_r, "turan part count");
  gen->add_option("--a", gen_a, "bipartite side a");
  gen->add_option("--b", gen_b, "bipartite side b");
  gen->add_option("--p", gen_p, "edge probability");
  gen->add_option("--q", gen_q, "paley prime, 1 mod 4");
  gen->add_option("--k", gen_k, "removed clique size");
  gen->add_option("--sizes", gen_sizes, "clique sizes");
  gen->add_option("--connections", gen_conns, "circulant connection set");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigendecomposition");
  bool with_vectors = false;
  spectrum_cmd->add_option("--in", opts.in_path, "edge list")->required();
  spectrum_cmd->add_flag("--vectors", with_vectors, "export eigenvectors");

  auto* recursion_cmd =
      app.add_subcommand("recursion", "threshold-sum recursion checks");
  recursion_cmd->add_option("--in", opts.in_path, "edge list")->required();

  auto* probe_cmd =
      app.add_subcommand("probe", "Gaussian probe and identity checks");
  probe_cmd->add_option("--in", opts.in_path, "edge list")->required();
  double probe_t = -1.0;
  probe_cmd->add_option("--T", probe_t,
                        "truncation threshold (default lambda_1 / 2)");

  auto* surplus_cmd =
      app.add_subcommand("surplus", "max-cut surplus certificates");
  surplus_cmd->add_option("--in", opts.in_path, "edge list")->required();
  bool exact = false;
  surplus_cmd->add_flag("--exact", exact, "run the exact solver (n <= cap)");

  auto* structure_cmd =
      app.add_subcommand("structure", "spectral partitioning verdict");
  structure_cmd->add_option("--in", opts.in_path, "edge list")->required();

  auto* increment_cmd =
      app.add_subcommand("increment", "density increment loop");
  increment_cmd->add_option("--in", opts.in_path, "edge list")->required();

  auto* corpus_cmd = app.add_subcommand("corpus", "run a corpus suite");
  std::string suite = "all";
  corpus_cmd
      ->add_option("--suite", suite,
                   "identities|recursion|probe|surplus|structure|increment|all")
      ->check(CLI::IsMember({"identities", "recursion", "probe", "surplus",
                             "structure", "increment", "all"}));

  // global flags may follow the subcommand name
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // anything but help is a usage error
  }

  try {
    specgraph::SuiteParams params = resolve_params(opts);

    if (gen->parsed()) {
      specgraph::GraphFamilySpec spec;
      using F = specgraph::GraphFamilySpec;
      if (family == "complete") spec = F::complete(gen_n);
      else if (family == "turan") spec = F::turan(gen_n, gen_r);
      else if (family == "union_cliques") spec = F::union_cliques(gen_sizes);
      else if (family == "complete_bipartite")
        spec = F::complete_bipartite(gen_a, gen_b);
      else if (family == "erdos_renyi")
        spec = F::erdos_renyi(gen_n, gen_p, opts.seed);
      else if (family == "circulant") spec = F::circulant(gen_n, gen_conns);
      else if (family == "paley") spec = F::paley(gen_q);
      else if (family == "complete_minus_clique")
        spec = F::complete_minus_clique(gen_n, gen_k);
      else
        throw CLI::ValidationError("unknown family: " + family);
      write_text(opts.out_path,
                 specgraph::format_edge_list(specgraph::generate(spec)));
      return 0;
    }

    if (spectrum_cmd->parsed()) {
      specgraph::Graph g = load_graph(opts.in_path);
      specgraph::Spectrum s = specgraph::decompose(g);
      Json row = specgraph::to_json(s, with_vectors);
      row["n"] = g.n();
      row["m"] = g.m();
      row["energy"] = specgraph::energy(s);
      emit_report(opts, params, Json::array({row}),
                  Json{{"pass", 1}, {"fail", 0}});
      return 0;
    }

    if (recursion_cmd->parsed()) {
      specgraph::Graph g = load_graph(opts.in_path);
      specgraph::Spectrum s = specgraph::decompose(g);
      specgraph::ThresholdProfile prof(s);
      Json rows = Json::array();
      auto key = specgraph::verify_key_recursion(
          prof, s.lambda_n(),
          specgraph::default_threshold_grid(
              prof, specgraph::key_recursion_floor(s)));
      rows.push_back(specgraph::to_json(key));
      auto surplus_rec = specgraph::verify_surplus_recursion(
          prof, specgraph::dual_upper(s).value,
          specgraph::default_threshold_grid(
              prof, specgraph::surplus_recursion_floor(s.n)));
      rows.push_back(specgraph::to_json(surplus_rec));
      long long fails =
          (key.overall == specgraph::CheckStatus::Fail ? 1 : 0) +
          (surplus_rec.overall == specgraph::CheckStatus::Fail ? 1 : 0);
      emit_report(opts, params, std::move(rows),
                  Json{{"fail", fails}});
      return failures_to_exit(fails);
    }

    if (probe_cmd->parsed()) {
      specgraph::Graph g = load_graph(opts.in_path);
      specgraph::Spectrum s = specgraph::decompose(g);
      long long fails = 0;
      Json rows = Json::array();
      for (int p = 0; p < params.probes_per_graph; ++p) {
        Eigen::VectorXd q(s.n);
        for (int v = 0; v < s.n; ++v)
          q[v] = specgraph::rng::normal(
              params.seed, static_cast<std::uint64_t>(p) * s.n + v);
        auto check = specgraph::hadamard_identity_check(g, s, q);
        if (!check.pass) ++fails;
      }
      Json row;
      row["identityProbes"] = params.probes_per_graph;
      row["identityFailures"] = fails;
      double threshold = probe_t > 0.0 ? probe_t : s.lambda_1() / 2.0;
      if (threshold > 0.0 &&
          threshold <= static_cast<double>(s.n)) {
        auto trep = specgraph::truncation_effect_estimate(
            s, threshold, params.mc_samples, params.seed);
        row["truncation"] = specgraph::to_json(trep);
        if (!trep.pass) ++fails;
      }
      rows.push_back(std::move(row));
      emit_report(opts, params, std::move(rows), Json{{"fail", fails}});
      return failures_to_exit(fails);
    }

    if (surplus_cmd->parsed()) {
      specgraph::Graph g = load_graph(opts.in_path);
      specgraph::Spectrum s = specgraph::decompose(g);
      Json rows = Json::array();
      long long fails = 0;
      auto push = [&](const specgraph::SurplusCertificate& cert) {
        rows.push_back(specgraph::to_json(cert));
      };
      auto energy_c = specgraph::energy_certificate(s);
      auto cubic_c = specgraph::cubic_certificate(s);
      auto dual_c = specgraph::dual_upper(s);
      auto sdp = specgraph::sdp_lower(g, s, {.seed = params.seed});
      push(energy_c);
      push(cubic_c);
      push(sdp.certificate);
      push(dual_c);
      push(specgraph::mixing_upper(g, s));
      push(specgraph::edwards_floor(g));
      push(specgraph::degeneracy_floor(g));
      if (sdp.certificate.value > dual_c.value + 1e-6) ++fails;
      if (energy_c.value > sdp.certificate.value + 1e-6) ++fails;
      Json summary;
      if (exact) {
        specgraph::Cut cut = specgraph::maxcut_exact(g, params.maxcut_cap);
        specgraph::SurplusCertificate cert;
        cert.kind = specgraph::CertificateKind::ExactCut;
        cert.target = specgraph::SurplusCertificate::Target::Sp;
        cert.value = cut.surplus(g);
        cert.cut_witness = cut;
        rows.push_back(specgraph::to_json(cert, true));
        summary["sp"] = cut.surplus(g);
        summary["mc"] = cut.cut_edges;
      }
      summary["fail"] = fails;
      emit_report(opts, params, std::move(rows), std::move(summary));
      return failures_to_exit(fails);
    }

    if (structure_cmd->parsed()) {
      specgraph::Graph g = load_graph(opts.in_path);
      specgraph::Spectrum s = specgraph::decompose(g);
      specgraph::StructureParams sp;
      sp.gamma = params.gamma;
      sp.delta = params.delta;
      sp.eta = params.eta;
      sp.mu = params.mu;
      sp.seed = params.seed;
      sp.pivot_seeds = params.pivot_seeds;
      auto verdict = specgraph::structure_verdict(g, s, sp);
      long long fails =
          verdict.census.claim3 == specgraph::CheckStatus::Fail ||
                  verdict.cherry_check == specgraph::CheckStatus::Fail
              ? 1
              : 0;
      emit_report(opts, params,
                  Json::array({specgraph::to_json(verdict)}),
                  Json{{"outcome", to_string(verdict.outcome)},
                       {"fail", fails}});
      return failures_to_exit(fails);
    }

    if (increment_cmd->parsed()) {
      specgraph::Graph g = load_graph(opts.in_path);
      specgraph::IncrementOptions io;
      io.kappa = params.kappa;
      auto trace = specgraph::increment_loop(g, params.density_target, io,
                                             params.step_cap);
      long long fails = trace.potential_monotone ? 0 : 1;
      emit_report(opts, params, Json::array({specgraph::to_json(trace)}),
                  Json{{"terminal", to_string(trace.terminal)},
                       {"fail", fails}});
      return failures_to_exit(fails);
    }

    if (corpus_cmd->parsed()) {
      auto analyzed =
          specgraph::analyze_corpus(specgraph::standard_corpus(),
                                    params.workers);
      std::vector<std::string> names =
          suite == "all"
              ? std::vector<std::string>{"identities", "recursion", "probe",
                                         "surplus", "structure", "increment"}
              : std::vector<std::string>{suite};
      Json rows = Json::array();
      long long fails = 0;
      Json summary;
      for (const std::string& name : names) {
        specgraph::SuiteReport rep =
            specgraph::run_suite(name, analyzed, params);
        rows.push_back(specgraph::suite_report_json(rep));
        summary[name] = {{"pass", rep.pass},
                         {"fail", rep.fail},
                         {"notApplicable", rep.not_applicable}};
        fails += rep.fail;
      }
      summary["fail"] = fails;
      emit_report(opts, params, std::move(rows), std::move(summary));
      return failures_to_exit(fails);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
