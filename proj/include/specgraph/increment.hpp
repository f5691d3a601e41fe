#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// p^3 n, the monotone potential of the increment loop.
inline double potential(double p, long long n) {
  return p * p * p * static_cast<double>(n);
}

// Repeatedly removes the vertex of highest current degree among those with
// degree >= threshold (ties to the lowest index). Degrees are recomputed in
// the shrinking remainder.
inline std::pair<std::vector<int>, std::vector<int>> peel_high_degree(
    const Graph& g, double threshold) {
  if (!(threshold > 0.0))
    throw std::invalid_argument("peel_high_degree: threshold must be > 0");
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  std::vector<bool> alive(static_cast<std::size_t>(g.n()), true);
  for (int v = 0; v < g.n(); ++v) deg[static_cast<std::size_t>(v)] = g.deg(v);
  std::vector<int> removed;
  while (true) {
    int pick = -1;
    for (int v = 0; v < g.n(); ++v)
      if (alive[static_cast<std::size_t>(v)] &&
          static_cast<double>(deg[static_cast<std::size_t>(v)]) >= threshold &&
          (pick < 0 || deg[static_cast<std::size_t>(v)] >
                           deg[static_cast<std::size_t>(pick)]))
        pick = v;
    if (pick < 0) break;
    alive[static_cast<std::size_t>(pick)] = false;
    removed.push_back(pick);
    for (int u = 0; u < g.n(); ++u)
      if (alive[static_cast<std::size_t>(u)] && g.has_edge(pick, u))
        --deg[static_cast<std::size_t>(u)];
  }
  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v)
    if (alive[static_cast<std::size_t>(v)]) rest.push_back(v);
  return {removed, rest};
}

/// Vertex maximizing the edge count of its open neighborhood (ties to the
/// lowest index) together with that count; sum_v 2 e(G[N(v)]) = 6 t(G).
inline std::pair<int, long long> densest_neighborhood(const Graph& g) {
  if (g.n() < 1)
    throw std::invalid_argument("densest_neighborhood: need n >= 1");
  int best = 0;
  long long best_edges = -1;
  for (int v = 0; v < g.n(); ++v) {
    long long twice = 0;
    for (int u = 0; u < g.n(); ++u)
      if (g.has_edge(v, u)) twice += g.common_neighbors(v, u);
    long long e = twice / 2;  // triangles through v
    if (e > best_edges) {
      best = v;
      best_edges = e;
    }
  }
  return {best, best_edges};
}

enum class IncrementCase { DoubleDensity, SqrtDensity, EarlyExit };

inline const char* to_string(IncrementCase c) {
  switch (c) {
    case IncrementCase::DoubleDensity: return "double-density";
    case IncrementCase::SqrtDensity: return "sqrt-density";
    case IncrementCase::EarlyExit: return "early-exit";
  }
  return "?";
}

struct IncrementStep {
  std::vector<int> output_vertices;  // indices into the step's input graph
  std::vector<int> peeled;
  IncrementCase tag = IncrementCase::EarlyExit;
  double p0 = 0.0;
  double p1 = 0.0;
  long long n0 = 0;
  long long n1 = 0;
  std::string note;
};

struct IncrementOptions {
  double kappa = 1e-2;       // sqrt-density constant; paper preset 1e-10
  double peel_factor = 4.0;  // peel threshold multiplier on p0 n0
};

namespace detail {

// Pads `base` up to `target` vertices, picking by descending degree in g,
// ties to the lowest index.
inline std::vector<int> pad_by_degree(const Graph& g, std::vector<int> base,
                                      std::size_t target) {
  std::vector<bool> in(static_cast<std::size_t>(g.n()), false);
  for (int v : base) in[static_cast<std::size_t>(v)] = true;
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.deg(a) != g.deg(b)) return g.deg(a) > g.deg(b);
    return a < b;
  });
  for (int v : order) {
    if (base.size() >= target) break;
    if (!in[static_cast<std::size_t>(v)]) {
      in[static_cast<std::size_t>(v)] = true;
      base.push_back(v);
    }
  }
  std::sort(base.begin(), base.end());
  return base;
}

}  // namespace detail

/// One step of the density increment: peel at peel_factor * p0 * n0; if the
/// remainder thinned to p0/4 the peeled set carries the mass (double-density
/// case, output ceil(n0/8) vertices around R), otherwise the densest open
/// neighborhood does (sqrt-density case, output a floor(20 p n)-vertex
/// window around N(v0)). At desk scale 20 p n often exceeds n, where the
/// window collapses to the closed-neighborhood size instead.
inline IncrementStep increment_step(const Graph& g0,
                                    const IncrementOptions& opts = {}) {
  if (g0.m() < 1)
    throw std::invalid_argument("increment_step: graph has no edges");
  IncrementStep step;
  step.n0 = g0.n();
  step.p0 = density(g0);
  const double threshold = opts.peel_factor * step.p0 * static_cast<double>(g0.n());
  auto [removed, rest] = peel_high_degree(g0, threshold);
  step.peeled = removed;
  Graph remainder = induced_subgraph(g0, rest);
  const double rem_density =
      remainder.n() > 0 ? density(remainder) : 0.0;

  auto finish = [&](std::vector<int> out, IncrementCase tag,
                    double post_floor) -> bool {
    Graph g1 = induced_subgraph(g0, out);
    double p1 = g1.n() > 0 ? density(g1) : 0.0;
    if (p1 + 1e-12 < post_floor) return false;
    step.output_vertices = std::move(out);
    step.tag = tag;
    step.p1 = p1;
    step.n1 = g1.n();
    return true;
  };

  auto try_double = [&]() {
    std::size_t target = static_cast<std::size_t>(
        (static_cast<long long>(g0.n()) + 7) / 8);
    target = std::max(target, removed.size());
    std::vector<int> w = detail::pad_by_degree(g0, removed, target);
    return finish(std::move(w), IncrementCase::DoubleDensity, 2.0 * step.p0);
  };
  auto try_sqrt = [&]() {
    if (remainder.m() == 0) return false;
    auto [v0, e0] = densest_neighborhood(remainder);
    std::vector<int> nbrs = remainder.neighbors(v0);
    long long window = static_cast<long long>(
        std::floor(20.0 * density(remainder) * remainder.n()));
    if (window >= remainder.n())
      window = static_cast<long long>(nbrs.size()) + 1;
    window = std::max(window, static_cast<long long>(nbrs.size()));
    std::vector<int> w = detail::pad_by_degree(
        remainder, std::move(nbrs), static_cast<std::size_t>(window));
    // map back to g0 vertex ids
    for (int& v : w) v = rest[static_cast<std::size_t>(v)];
    return finish(std::move(w), IncrementCase::SqrtDensity,
                  opts.kappa * std::sqrt(step.p0));
  };

  bool ok = rem_density <= step.p0 / 4.0 ? (try_double() || try_sqrt())
                                         : (try_sqrt() || try_double());
  if (!ok) {
    step.tag = IncrementCase::EarlyExit;
    step.output_vertices.clear();
    step.p1 = rem_density;
    step.n1 = remainder.n();
    step.note = "both case postconditions failed; graph outside the "
                "increment regime";
  }
  return step;
}

enum class IncrementTerminal { DensityTarget, PreconditionFailed, StepCap };

inline const char* to_string(IncrementTerminal t) {
  switch (t) {
    case IncrementTerminal::DensityTarget: return "density-target";
    case IncrementTerminal::PreconditionFailed: return "precondition-failed";
    case IncrementTerminal::StepCap: return "step-cap";
  }
  return "?";
}

struct IncrementTraceRow {
  int step = 0;
  long long n = 0;
  double p = 0.0;
  IncrementCase tag = IncrementCase::EarlyExit;
  long long peeled = 0;
  double pot = 0.0;  // p^3 n before the step
  std::vector<int> vertices;  // in original-graph ids
};

struct IncrementTrace {
  std::vector<IncrementTraceRow> steps;
  IncrementTerminal terminal = IncrementTerminal::PreconditionFailed;
  std::vector<int> final_vertices;  // original ids
  double final_density = 0.0;
  long long final_n = 0;
  // monotone-potential audit within the regime guard p <= regime_cap
  bool potential_monotone = true;
  double regime_cap = 0.0;
};

/// Iterates increment_step until the density target, an early exit, or the
/// step cap. The potential p^3 n is audited across consecutive completed
/// steps whenever the starting density sits under the regime guard
/// (default kappa^2).
inline IncrementTrace increment_loop(const Graph& g, double density_target,
                                     const IncrementOptions& opts = {},
                                     int step_cap = 64,
                                     double regime_cap = -1.0) {
  if (!(density_target > 0.0 && density_target < 1.0))
    throw std::invalid_argument("increment_loop: target outside (0,1)");
  if (step_cap < 1)
    throw std::invalid_argument("increment_loop: step_cap >= 1");
  IncrementTrace trace;
  trace.regime_cap = regime_cap > 0.0 ? regime_cap : opts.kappa * opts.kappa;

  Graph current = g;
  std::vector<int> ids(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) ids[static_cast<std::size_t>(v)] = v;

  for (int k = 0; k < step_cap; ++k) {
    trace.final_n = current.n();
    trace.final_density = current.n() > 0 ? density(current) : 0.0;
    trace.final_vertices = ids;
    if (trace.final_density >= density_target) {
      trace.terminal = IncrementTerminal::DensityTarget;
      return trace;
    }
    if (current.m() < 1) {
      trace.terminal = IncrementTerminal::PreconditionFailed;
      return trace;
    }
    IncrementStep step = increment_step(current, opts);
    IncrementTraceRow row;
    row.step = k;
    row.n = current.n();
    row.p = density(current);
    row.tag = step.tag;
    row.peeled = static_cast<long long>(step.peeled.size());
    row.pot = potential(row.p, row.n);
    if (step.tag == IncrementCase::EarlyExit) {
      trace.steps.push_back(row);
      trace.terminal = IncrementTerminal::PreconditionFailed;
      return trace;
    }
    if (row.p <= trace.regime_cap) {
      double next_pot = potential(step.p1, step.n1);
      if (next_pot < row.pot * (1.0 - 1e-9)) trace.potential_monotone = false;
    }
    std::vector<int> next_ids;
    next_ids.reserve(step.output_vertices.size());
    for (int v : step.output_vertices)
      next_ids.push_back(ids[static_cast<std::size_t>(v)]);
    row.vertices = next_ids;
    trace.steps.push_back(row);
    current = induced_subgraph(current, step.output_vertices);
    ids = std::move(next_ids);
  }
  trace.final_n = current.n();
  trace.final_density = current.n() > 0 ? density(current) : 0.0;
  trace.final_vertices = ids;
  trace.terminal = trace.final_density >= density_target
                       ? IncrementTerminal::DensityTarget
                       : IncrementTerminal::StepCap;
  return trace;
}

}  // namespace specgraph
