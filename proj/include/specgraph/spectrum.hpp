#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Full eigendecomposition of the adjacency matrix, eigenvalues descending,
/// eigenvectors orthonormal in the columns of `vectors`.
struct Spectrum {
  Eigen::VectorXd lambdas;  // lambda_1 >= ... >= lambda_n
  Eigen::MatrixXd vectors;  // column i pairs with lambdas[i]
  int n = 0;
  long long m = 0;          // source edge count
  double residual = 0.0;    // max_i ||A v_i - lambda_i v_i||_2

  double lambda_1() const { return n > 0 ? lambdas[0] : 0.0; }
  double lambda_n() const { return n > 0 ? lambdas[n - 1] : 0.0; }
};

inline Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v)) a(u, v) = a(v, u) = 1.0;
  return a;
}

inline double default_residual_tol(int n, double lambda_max) {
  return 1e-8 * static_cast<double>(n) * std::max(1.0, std::abs(lambda_max));
}

/// Dense symmetric eigendecomposition of A_G, checked against the classical
/// identities (trace zero, square sum 2m) and the residual tolerance.
/// Ties are broken by eigenvector lexicographic order; the first nonzero
/// entry of each eigenvector is made positive.
inline Spectrum decompose(const Graph& g, double eps_res = -1.0) {
  if (g.n() < 1) throw std::invalid_argument("decompose: need n >= 1");
  const int n = g.n();
  Eigen::MatrixXd a = adjacency_matrix(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("decompose: eigensolver failed to converge");

  Spectrum s;
  s.n = n;
  s.m = g.m();
  s.lambdas.resize(n);
  s.vectors.resize(n, n);
  // Eigen returns ascending order; reverse and fix signs.
  for (int i = 0; i < n; ++i) {
    s.lambdas[i] = solver.eigenvalues()[n - 1 - i];
    Eigen::VectorXd v = solver.eigenvectors().col(n - 1 - i);
    for (int k = 0; k < n; ++k) {
      if (std::abs(v[k]) > 1e-10) {
        if (v[k] < 0) v = -v;
        break;
      }
    }
    s.vectors.col(i) = v;
  }
  // Stable tie order: equal eigenvalues sorted by eigenvector lex order.
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    if (s.lambdas[i] != s.lambdas[j]) return s.lambdas[i] > s.lambdas[j];
    for (int k = 0; k < n; ++k) {
      if (s.vectors(k, i) != s.vectors(k, j))
        return s.vectors(k, i) < s.vectors(k, j);
    }
    return false;
  });
  Eigen::VectorXd lam(n);
  Eigen::MatrixXd vec(n, n);
  for (int i = 0; i < n; ++i) {
    lam[i] = s.lambdas[idx[static_cast<std::size_t>(i)]];
    vec.col(i) = s.vectors.col(idx[static_cast<std::size_t>(i)]);
  }
  s.lambdas = std::move(lam);
  s.vectors = std::move(vec);

  s.residual = (a * s.vectors - s.vectors * s.lambdas.asDiagonal())
                   .colwise()
                   .norm()
                   .maxCoeff();
  const double tol =
      eps_res > 0 ? eps_res : default_residual_tol(n, s.lambdas[0]);
  if (s.residual > tol)
    throw std::runtime_error("decompose: residual " +
                             std::to_string(s.residual) + " exceeds tol");
  if (std::abs(s.lambdas.sum()) > tol)
    throw std::runtime_error("decompose: trace identity violated");
  if (std::abs(s.lambdas.squaredNorm() - 2.0 * static_cast<double>(s.m)) >
      tol)
    throw std::runtime_error("decompose: square-sum identity violated");
  return s;
}

inline double energy(const Spectrum& s) {
  return s.lambdas.array().abs().sum();
}

/// Queries L_T = {i : lambda_i >= T} and S_T = sum over L_T, O(log n) each
/// via prefix sums over the descending eigenvalues.
class ThresholdProfile {
 public:
  explicit ThresholdProfile(const Spectrum& s) : spectrum_(&s) {
    prefix_.resize(static_cast<std::size_t>(s.n) + 1, 0.0);
    for (int i = 0; i < s.n; ++i)
      prefix_[static_cast<std::size_t>(i) + 1] =
          prefix_[static_cast<std::size_t>(i)] + s.lambdas[i];
  }

  const Spectrum& spectrum() const { return *spectrum_; }
  int n() const { return spectrum_->n; }

  // |L_T|: number of eigenvalues >= T.
  int level_set_size(double T) const {
    const auto& lam = spectrum_->lambdas;
    int lo = 0, hi = spectrum_->n;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (lam[mid] >= T)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  }

  double threshold_sum(double T) const {
    return prefix_[static_cast<std::size_t>(level_set_size(T))];
  }

 private:
  const Spectrum* spectrum_;
  std::vector<double> prefix_;
};

/// Spectral triangle count (sum lambda_i^3) / 6.
inline double triangle_count_spectral(const Spectrum& s) {
  return s.lambdas.array().cube().sum() / 6.0;
}

struct FlatnessReport {
  // Slack of ||v_i||_inf <= sqrt(n)/|lambda_i| per nonzero eigenvalue;
  // positive slack means violation.
  double max_excess = 0.0;
  std::vector<int> violations;
  int checked = 0;
  bool pass(double tol) const { return max_excess <= tol; }
};

// Eigenvectors of large eigenvalues are flat: ||v_i||_inf <= sqrt(n)/|l_i|.
// Indices with lambda_i == 0 are skipped (vacuous).
inline FlatnessReport flatness_check(const Spectrum& s, double tol = 1e-8) {
  FlatnessReport rep;
  const double sqrt_n = std::sqrt(static_cast<double>(s.n));
  rep.max_excess = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < s.n; ++i) {
    if (s.lambdas[i] == 0.0) continue;
    ++rep.checked;
    double bound = sqrt_n / std::abs(s.lambdas[i]);
    double excess = s.vectors.col(i).lpNorm<Eigen::Infinity>() - bound;
    rep.max_excess = std::max(rep.max_excess, excess);
    if (excess > tol) rep.violations.push_back(i);
  }
  if (rep.checked == 0) rep.max_excess = 0.0;
  return rep;
}

/// Per-vertex vectors H_v with H_{v,i} = sqrt(lambda_i) v_{iv} over the
/// level set S = L_{gamma n}.
struct EmbeddingVectors {
  double gamma = 0.0;
  std::vector<int> level_set;  // indices into the spectrum, ascending
  Eigen::MatrixXd h;           // n x |S|, row v = H_v
};

inline EmbeddingVectors embedding_vectors(const Spectrum& s, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("embedding_vectors: gamma outside (0,1)");
  EmbeddingVectors emb;
  emb.gamma = gamma;
  const double threshold = gamma * static_cast<double>(s.n);
  for (int i = 0; i < s.n; ++i)
    if (s.lambdas[i] >= threshold) emb.level_set.push_back(i);
  const int d = static_cast<int>(emb.level_set.size());
  emb.h.resize(s.n, d);
  for (int c = 0; c < d; ++c) {
    int i = emb.level_set[static_cast<std::size_t>(c)];
    emb.h.col(c) = std::sqrt(s.lambdas[i]) * s.vectors.col(i);
  }
  // |S| <= sum lambda_i^2 / (gamma n)^2 and ||H_v||_inf <= gamma^{-1/2}
  const double sq = s.lambdas.squaredNorm();
  if (static_cast<double>(d) > sq / (threshold * threshold) + 1e-9)
    throw std::runtime_error("embedding_vectors: level set too large");
  if (d > 0) {
    double cap = 1.0 / std::sqrt(gamma) + 1e-9;
    if (emb.h.array().abs().maxCoeff() > cap)
      throw std::runtime_error("embedding_vectors: coordinate exceeds cap");
  }
  return emb;
}

/// Sum of lambda_i^2 over indices outside `level_set`; the square Frobenius
/// mass of HH^T - A.
inline double residual_gram_mass(const Spectrum& s,
                                 const std::vector<int>& level_set) {
  std::vector<bool> in(static_cast<std::size_t>(s.n), false);
  for (int i : level_set) {
    if (i < 0 || i >= s.n)
      throw std::out_of_range("residual_gram_mass: index out of range");
    in[static_cast<std::size_t>(i)] = true;
  }
  double mass = 0.0;
  for (int i = 0; i < s.n; ++i)
    if (!in[static_cast<std::size_t>(i)]) mass += s.lambdas[i] * s.lambdas[i];
  return mass;
}

// Closed-form circulant spectrum: lambda_k = sum over the symmetrized
// connection set of cos(2 pi k s / n). Serves as an eigensolver oracle.
inline std::vector<double> circulant_eigenvalues(
    int n, const std::vector<int>& connections) {
  std::vector<int> full;
  for (int s : connections) {
    full.push_back(s);
    if (s != n - s) full.push_back(n - s);
  }
  std::sort(full.begin(), full.end());
  full.erase(std::unique(full.begin(), full.end()), full.end());
  std::vector<double> lam(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    double v = 0.0;
    for (int s : full)
      v += std::cos(2.0 * std::numbers::pi * static_cast<double>(k) *
                    static_cast<double>(s) / static_cast<double>(n));
    lam[static_cast<std::size_t>(k)] = v;
  }
  return lam;
}

}  // namespace specgraph
