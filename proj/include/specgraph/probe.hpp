#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/recursion.hpp"
#include "specgraph/rng.hpp"
#include "specgraph/spectrum.hpp"

namespace specgraph {

/// Subspace of R^n given by an orthonormal basis in the columns of `basis`.
struct Subspace {
  int ambient = 0;
  Eigen::MatrixXd basis;
  std::string label;

  int dim() const { return static_cast<int>(basis.cols()); }
};

struct ProbeVector {
  Eigen::VectorXd entries;
  std::uint64_t seed = 0;
  std::string subspace;
  bool clipped = false;
  double beta = 0.0;
  double clamp_level = 0.0;  // beta * ||q||_2 / sqrt(n) at clip time
};

inline double default_span_rank_tol(int n) {
  return 1e-10 * std::sqrt(static_cast<double>(n));
}

/// Orthonormal basis of span{v_i o v_j : i, j in L_T} via modified
/// Gram-Schmidt with one re-orthogonalization pass. Product vectors are
/// highly collinear for near-uniform eigenvectors, hence the re-pass.
inline Subspace hadamard_span(const Spectrum& s, double threshold,
                              double rank_tol = -1.0) {
  ThresholdProfile prof(s);
  const int k = prof.level_set_size(threshold);
  if (k == 0)
    throw std::invalid_argument("hadamard_span: empty level set");
  if (rank_tol <= 0.0) rank_tol = default_span_rank_tol(s.n);

  Subspace w;
  w.ambient = s.n;
  w.label = "hadamard:T=" + std::to_string(threshold);
  std::vector<Eigen::VectorXd> basis;
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      Eigen::VectorXd cand =
          s.vectors.col(i).cwiseProduct(s.vectors.col(j));
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) cand -= b.dot(cand) * b;
      double norm = cand.norm();
      if (norm > rank_tol) basis.push_back(cand / norm);
    }
  }
  w.basis.resize(s.n, static_cast<int>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c)
    w.basis.col(static_cast<int>(c)) = basis[c];
  return w;
}

/// q = sum_i x_i b_i with x_i standard normal drawn from (seed, i).
inline ProbeVector sample_gaussian(const Subspace& w, std::uint64_t seed) {
  if (w.dim() < 1)
    throw std::invalid_argument("sample_gaussian: need dim >= 1");
  Eigen::VectorXd x(w.dim());
  for (int i = 0; i < w.dim(); ++i)
    x[i] = rng::normal(seed, static_cast<std::uint64_t>(i));
  ProbeVector q;
  q.entries = w.basis * x;
  q.seed = seed;
  q.subspace = w.label;
  return q;
}

/// Entrywise clamp to +-beta ||q||_2 / sqrt(n). A clipped probe remembers
/// its clamp level, so re-clipping at the same beta is a no-op (the raw
/// definition recomputes the level from the already-shrunk norm and would
/// keep shaving).
inline ProbeVector clip(const ProbeVector& q, double beta) {
  if (!(beta > 1.0)) throw std::invalid_argument("clip: beta must be > 1");
  if (q.clipped && q.beta == beta) return q;
  const double n = static_cast<double>(q.entries.size());
  const double level =
      q.clipped ? q.clamp_level : beta * q.entries.norm() / std::sqrt(n);
  ProbeVector out = q;
  out.entries = q.entries.cwiseMax(-level).cwiseMin(level);
  out.clipped = true;
  out.beta = beta;
  out.clamp_level = level;
  return out;
}

struct HadamardIdentityCheck {
  double lhs = 0.0;        // sum_i lambda_i <v_i, q>^2
  double rhs = 0.0;        // sum_{ij} lambda_i lambda_j <v_i o v_j, q>^2
  double quad_form = 0.0;  // q^T A q, the direct cross-check of the lhs
  bool pass = false;
};

/// The identity behind the key recursion: both spectral routes of
/// q^T (A o A) q = q^T A q agree for every q because A has 0/1 entries.
inline HadamardIdentityCheck hadamard_identity_check(const Graph& g,
                                                     const Spectrum& s,
                                                     const Eigen::VectorXd& q,
                                                     double tol = 1e-6) {
  if (q.size() != s.n)
    throw std::invalid_argument("hadamard_identity_check: length mismatch");
  HadamardIdentityCheck check;
  Eigen::VectorXd proj = s.vectors.transpose() * q;
  check.lhs = (s.lambdas.array() * proj.array().square()).sum();
  // B_{ij} = <v_i o v_j, q>; rhs = lambda^T (B o B) lambda
  Eigen::MatrixXd b =
      s.vectors.transpose() * (q.asDiagonal() * s.vectors);
  check.rhs =
      s.lambdas.dot(b.array().square().matrix() * s.lambdas);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v)) check.quad_form += 2.0 * q[u] * q[v];
  const double scale = tol * (1.0 + std::abs(check.lhs));
  check.pass = std::abs(check.lhs - check.rhs) <= scale &&
               std::abs(check.lhs - check.quad_form) <= scale;
  return check;
}

inline HadamardIdentityCheck hadamard_identity_check(const Graph& g,
                                                     const Spectrum& s,
                                                     const ProbeVector& q,
                                                     double tol = 1e-6) {
  return hadamard_identity_check(g, s, q.entries, tol);
}

struct TruncationPairRow {
  int i = 0, j = 0;       // spectrum indices (j < 0 for part-2 rows)
  double mean = 0.0;
  double stderr_ = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// Monte Carlo estimates for the two moment bounds after clipping at
/// beta = 2 n^4 / T^4: part 1 lower-bounds E<v_i o v_j, Tq>^2 for pairs in
/// L_T, part 2 upper-bounds E<v_i, Tq>^2 by 25 for i in L_{T^2/8n}.
struct TruncationReport {
  double threshold = 0.0;
  double beta = 0.0;
  int samples = 0;
  std::vector<TruncationPairRow> part1;
  std::vector<TruncationPairRow> part2;
  bool pass = true;
};

// Statistical acceptance at 4 standard errors: the bound must lie within
// mean +- 4 se or on the safe side of it.
inline TruncationReport truncation_effect_estimate(const Spectrum& s,
                                                   double threshold,
                                                   int samples,
                                                   std::uint64_t seed) {
  if (samples < 100)
    throw std::invalid_argument(
        "truncation_effect_estimate: need >= 100 samples");
  if (!(threshold > 0.0 && threshold <= static_cast<double>(s.n)))
    throw std::invalid_argument("truncation_effect_estimate: T outside (0,n]");
  const double n = static_cast<double>(s.n);
  TruncationReport rep;
  rep.threshold = threshold;
  rep.beta = 2.0 * std::pow(n, 4) / std::pow(threshold, 4);
  rep.samples = samples;

  Subspace w = hadamard_span(s, threshold);
  ThresholdProfile prof(s);
  const int k = prof.level_set_size(threshold);
  const int k2 = prof.level_set_size(threshold * threshold / (8.0 * n));

  std::vector<Eigen::VectorXd> products;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      pairs.emplace_back(i, j);
      products.push_back(s.vectors.col(i).cwiseProduct(s.vectors.col(j)));
    }

  std::vector<double> sum1(pairs.size(), 0.0), sq1(pairs.size(), 0.0);
  std::vector<double> sum2(static_cast<std::size_t>(k2), 0.0),
      sq2(static_cast<std::size_t>(k2), 0.0);
  for (int t = 0; t < samples; ++t) {
    ProbeVector q =
        sample_gaussian(w, rng::mix(seed, static_cast<std::uint64_t>(t)));
    ProbeVector tq = clip(q, rep.beta);
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      double ip = products[a].dot(tq.entries);
      sum1[a] += ip * ip;
      sq1[a] += ip * ip * ip * ip;
    }
    for (int i = 0; i < k2; ++i) {
      double ip = s.vectors.col(i).dot(tq.entries);
      sum2[static_cast<std::size_t>(i)] += ip * ip;
      sq2[static_cast<std::size_t>(i)] += ip * ip * ip * ip;
    }
  }

  auto finish = [&](double sum, double sq) {
    double mean = sum / samples;
    double var = std::max(sq / samples - mean * mean, 0.0);
    return std::pair<double, double>(mean,
                                     std::sqrt(var / samples));
  };
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    TruncationPairRow row;
    row.i = pairs[a].first;
    row.j = pairs[a].second;
    auto [mean, se] = finish(sum1[a], sq1[a]);
    row.mean = mean;
    row.stderr_ = se;
    double base = products[a].norm() - 0.5 / std::sqrt(n);
    row.bound = base > 0.0 ? base * base : 0.0;
    row.pass = row.mean + 4.0 * row.stderr_ >= row.bound;
    rep.pass &= row.pass;
    rep.part1.push_back(row);
  }
  for (int i = 0; i < k2; ++i) {
    TruncationPairRow row;
    row.i = i;
    row.j = -1;
    auto [mean, se] = finish(sum2[static_cast<std::size_t>(i)],
                             sq2[static_cast<std::size_t>(i)]);
    row.mean = mean;
    row.stderr_ = se;
    row.bound = 25.0;
    row.pass = row.mean - 4.0 * row.stderr_ <= row.bound;
    rep.pass &= row.pass;
    rep.part2.push_back(row);
  }
  return rep;
}

}  // namespace specgraph
