#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/rng.hpp"

namespace specgraph {

constexpr int kClusterEditExactCap = 12;

struct ClusterEditResult {
  enum class Mode { Exact, PivotHeuristic };
  long long edit_count = 0;
  std::vector<int> partition;  // vertex -> cluster id
  Mode mode = Mode::Exact;
};

// Pairs whose adjacency disagrees with the union-of-cliques graph induced by
// the partition.
inline long long edit_count_for_partition(const Graph& g,
                                          const std::vector<int>& partition) {
  long long cost = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      bool same = partition[static_cast<std::size_t>(u)] ==
                  partition[static_cast<std::size_t>(v)];
      if (same != g.has_edge(u, v)) ++cost;
    }
  return cost;
}

// Minimum over all vertex partitions, enumerated as restricted growth
// strings. Bell(12) is about 4.2M, hence the cap.
inline ClusterEditResult cluster_edit_exact(const Graph& g) {
  const int n = g.n();
  if (n > kClusterEditExactCap)
    throw std::invalid_argument("cluster_edit_exact: n exceeds cap 12");
  ClusterEditResult best;
  best.mode = ClusterEditResult::Mode::Exact;
  if (n == 0) return best;

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v)) adj[static_cast<std::size_t>(u)] |= 1u << v;

  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> cluster_mask(static_cast<std::size_t>(n) + 1, 0);
  best.edit_count = -1;

  // DFS over assignments; carries within-cluster pair/edge totals.
  auto rec = [&](auto&& self, int v, int used, long long within_pairs,
                 long long within_edges) -> void {
    if (v == n) {
      long long cost = (within_pairs - within_edges) + (g.m() - within_edges);
      if (best.edit_count < 0 || cost < best.edit_count) {
        best.edit_count = cost;
        best.partition = assign;
      }
      return;
    }
    for (int c = 0; c <= used; ++c) {
      std::uint32_t mask = cluster_mask[static_cast<std::size_t>(c)];
      int sz = std::popcount(mask);
      int hits = std::popcount(mask & adj[static_cast<std::size_t>(v)]);
      assign[static_cast<std::size_t>(v)] = c;
      cluster_mask[static_cast<std::size_t>(c)] |= 1u << v;
      self(self, v + 1, std::max(used, c + 1), within_pairs + sz,
           within_edges + hits);
      cluster_mask[static_cast<std::size_t>(c)] = mask;
    }
  };
  rec(rec, 0, 0, 0, 0);
  return best;
}

// Random-pivot clustering: pick an unprocessed pivot, cluster it with its
// unprocessed neighbors, repeat. Best of `seeds` runs; an upper bound on the
// exact edit count.
inline ClusterEditResult cluster_edit_pivot(const Graph& g,
                                            std::uint64_t seed,
                                            int seeds = 32) {
  if (seeds < 1) throw std::invalid_argument("cluster_edit_pivot: seeds >= 1");
  const int n = g.n();
  ClusterEditResult best;
  best.mode = ClusterEditResult::Mode::PivotHeuristic;
  best.edit_count = -1;
  if (n == 0) {
    best.edit_count = 0;
    return best;
  }
  for (int run = 0; run < seeds; ++run) {
    CounterRng r(rng::mix(seed, static_cast<std::uint64_t>(run)));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(order[static_cast<std::size_t>(i)],
                order[r.next_below(static_cast<std::uint64_t>(i) + 1)]);
    std::vector<int> part(static_cast<std::size_t>(n), -1);
    int next_cluster = 0;
    for (int pivot : order) {
      if (part[static_cast<std::size_t>(pivot)] >= 0) continue;
      part[static_cast<std::size_t>(pivot)] = next_cluster;
      for (int u = 0; u < n; ++u)
        if (part[static_cast<std::size_t>(u)] < 0 && g.has_edge(pivot, u))
          part[static_cast<std::size_t>(u)] = next_cluster;
      ++next_cluster;
    }
    long long cost = edit_count_for_partition(g, part);
    if (best.edit_count < 0 || cost < best.edit_count) {
      best.edit_count = cost;
      best.partition = part;
    }
  }
  return best;
}

}  // namespace specgraph
