#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/rng.hpp"

namespace specgraph {

struct CorpusEntry {
  std::string name;
  Graph graph;
  // nonempty for circulant-type entries (Paley graphs included): the
  // connection set, for the closed-form spectrum oracle
  std::vector<int> circulant;
};

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

// Three cliques of size m; the first complete to the other two, which see
// no edge between them. Blows a cherry up part-wise.
inline Graph cherry_blowup(int m) {
  Graph g(3 * m);
  auto part = [m](int p, int i) { return p * m + i; };
  for (int p = 0; p < 3; ++p)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) g.add_edge(part(p, i), part(p, j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      g.add_edge(part(0, i), part(1, j));
      g.add_edge(part(0, i), part(2, j));
    }
  return g;
}

// K_k planted on vertices 0..k-1 over sparse background noise.
inline Graph planted_clique(int n, int k, double noise_p,
                            std::uint64_t seed) {
  Graph g = generate(GraphFamilySpec::erdos_renyi(n, noise_p, seed));
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

namespace detail {

inline std::string join_sizes(const std::vector<int>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(sizes[i]);
  }
  return out;
}

}  // namespace detail

/// The deterministic evaluation corpus: every generator family crossed with
/// fixed size/seed grids, 300+ graphs with n <= 256.
inline std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> corpus;
  auto add = [&](std::string name, Graph g, std::vector<int> circ = {}) {
    corpus.push_back({std::move(name), std::move(g), std::move(circ)});
  };

  for (int n : {1, 2, 3, 4, 5, 6, 8, 10, 12, 16, 20, 26, 32, 48, 64, 100, 128,
                200, 256})
    add("complete_" + std::to_string(n),
        generate(GraphFamilySpec::complete(n)));

  for (auto [n, r] : std::vector<std::pair<int, int>>{{6, 2},
                                                      {9, 3},
                                                      {12, 4},
                                                      {16, 2},
                                                      {20, 5},
                                                      {24, 3},
                                                      {30, 2},
                                                      {36, 6},
                                                      {64, 4},
                                                      {100, 2},
                                                      {128, 8},
                                                      {200, 4},
                                                      {256, 2}})
    add("turan_" + std::to_string(n) + "_" + std::to_string(r),
        generate(GraphFamilySpec::turan(n, r)));

  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 7},
                                                      {2, 6},
                                                      {3, 3},
                                                      {5, 5},
                                                      {8, 8},
                                                      {10, 10},
                                                      {16, 16},
                                                      {12, 36},
                                                      {32, 32},
                                                      {64, 64},
                                                      {100, 28},
                                                      {128, 128},
                                                      {4, 12},
                                                      {6, 10},
                                                      {20, 44},
                                                      {48, 80}})
    add("bipartite_" + std::to_string(a) + "_" + std::to_string(b),
        generate(GraphFamilySpec::complete_bipartite(a, b)));

  for (const auto& sizes : std::vector<std::vector<int>>{
           {3, 2},
           {4, 4},
           {5, 4, 3, 2, 1},
           {8, 8},
           {4, 4, 4, 4},
           {8, 8, 8, 8, 8, 8, 8, 8},
           {16, 16, 16, 16},
           {20, 20, 20, 20, 20},
           {32, 32},
           {50, 30, 20},
           {64, 64},
           {128, 128},
           {1, 1, 1, 1},                  // empty graph on 4
           {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},  // empty graph on 10
           std::vector<int>(64, 1),       // empty graph on 64
       })
    add("cliques_" + detail::join_sizes(sizes),
        generate(GraphFamilySpec::union_cliques(sizes)));

  for (int n : {10, 16, 24, 32, 48, 64, 100, 128, 200, 256})
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9})
      for (std::uint64_t seed : {1ULL, 2ULL, 3ULL})
        add("er_" + std::to_string(n) + "_p" +
                std::to_string(static_cast<int>(p * 100)) + "_s" +
                std::to_string(seed),
            generate(GraphFamilySpec::erdos_renyi(n, p, seed)));

  for (int n : {5, 8, 12, 16, 17, 24, 32, 48, 64, 100, 128, 256}) {
    add("cycle_" + std::to_string(n),
        generate(GraphFamilySpec::circulant(n, {1})), {1});
    if (n >= 8)
      add("circulant_" + std::to_string(n) + "_12",
          generate(GraphFamilySpec::circulant(n, {1, 2})), {1, 2});
    if (n >= 17)
      add("circulant_" + std::to_string(n) + "_135",
          generate(GraphFamilySpec::circulant(n, {1, 3, 5})), {1, 3, 5});
    if (n >= 32)
      add("circulant_" + std::to_string(n) + "_1248",
          generate(GraphFamilySpec::circulant(n, {1, 2, 4, 8})),
          {1, 2, 4, 8});
  }

  for (int q : {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 109, 113, 137,
                149, 157, 173, 181, 193, 197, 229, 233, 241}) {
    // a Paley graph is circulant over the quadratic residues
    std::vector<int> residues;
    for (long long x = 1; x < q; ++x) {
      int r = static_cast<int>((x * x) % q);
      if (std::find(residues.begin(), residues.end(), r) == residues.end())
        residues.push_back(r);
    }
    std::sort(residues.begin(), residues.end());
    add("paley_" + std::to_string(q), generate(GraphFamilySpec::paley(q)),
        std::move(residues));
  }

  for (auto [n, k] : std::vector<std::pair<int, int>>{{8, 3},
                                                      {16, 4},
                                                      {25, 5},
                                                      {36, 6},
                                                      {64, 8},
                                                      {100, 10},
                                                      {144, 12},
                                                      {200, 14},
                                                      {256, 16}})
    add("kn_minus_k" + std::to_string(k) + "_" + std::to_string(n),
        generate(GraphFamilySpec::complete_minus_clique(n, k)));

  add("petersen", petersen());
  for (int m = 5; m <= 20; ++m)
    add("blowup_" + std::to_string(m), cherry_blowup(m));

  return corpus;
}

inline std::vector<CorpusEntry> corpus_with_max_n(int max_n) {
  std::vector<CorpusEntry> out;
  for (auto& e : standard_corpus())
    if (e.graph.n() <= max_n) out.push_back(std::move(e));
  return out;
}

/// The twenty graphs designated for the truncation-effect Monte Carlo, with
/// a per-graph threshold T keeping L_T nonempty.
inline std::vector<std::pair<CorpusEntry, double>> truncation_corpus() {
  std::vector<std::pair<CorpusEntry, double>> out;
  auto add = [&](std::string name, Graph g, double t) {
    out.push_back({{std::move(name), std::move(g)}, t});
  };
  for (int n : {8, 16, 24, 32, 48, 64})
    add("complete_" + std::to_string(n),
        generate(GraphFamilySpec::complete(n)), static_cast<double>(n) / 2.0);
  for (int k : {8, 16, 24})
    add("cliques_2x" + std::to_string(k),
        generate(GraphFamilySpec::union_cliques({k, k})),
        static_cast<double>(k) / 2.0);
  for (int a : {4, 8, 12, 16})
    add("bipartite_" + std::to_string(a) + "_" + std::to_string(a),
        generate(GraphFamilySpec::complete_bipartite(a, a)),
        static_cast<double>(a) / 2.0);
  add("turan_24_3", generate(GraphFamilySpec::turan(24, 3)), 8.0);
  add("turan_32_4", generate(GraphFamilySpec::turan(32, 4)), 12.0);
  add("kn_minus_k4_32",
      generate(GraphFamilySpec::complete_minus_clique(32, 4)), 13.0);
  add("paley_29", generate(GraphFamilySpec::paley(29)), 7.0);
  add("er_32_p70_s1", generate(GraphFamilySpec::erdos_renyi(32, 0.7, 1)),
      11.0);
  add("er_48_p50_s2", generate(GraphFamilySpec::erdos_renyi(48, 0.5, 2)),
      12.0);
  add("blowup_8", cherry_blowup(8), 9.0);
  return out;
}

}  // namespace specgraph
