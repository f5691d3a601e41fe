#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/rng.hpp"

namespace specgraph {

/// Simple undirected graph with adjacency stored as packed bit rows.
/// No self-loops; edge count and degrees are kept in sync with the bits.
class Graph {
 public:
  Graph() : Graph(0) {}
  explicit Graph(int n)
      : n_(n), words_((static_cast<std::size_t>(std::max(n, 0)) + 63) / 64),
        bits_(static_cast<std::size_t>(std::max(n, 0)) * words_, 0),
        deg_(std::max(n, 0), 0), m_(0) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  }

  int n() const { return n_; }
  long long m() const { return m_; }
  int deg(int v) const { return deg_[static_cast<std::size_t>(v)]; }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    return (word(u, v / 64) >> (v % 64)) & 1ULL;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (has_edge(u, v)) return;
    word(u, v / 64) |= 1ULL << (v % 64);
    word(v, u / 64) |= 1ULL << (u % 64);
    ++deg_[static_cast<std::size_t>(u)];
    ++deg_[static_cast<std::size_t>(v)];
    ++m_;
  }

  std::size_t words_per_row() const { return words_; }
  std::uint64_t row_word(int v, std::size_t w) const { return word(v, w); }

  int common_neighbors(int u, int v) const {
    int c = 0;
    for (std::size_t w = 0; w < words_; ++w)
      c += std::popcount(word(u, w) & word(v, w));
    return c;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(deg(v)));
    for (int u = 0; u < n_; ++u)
      if (has_edge(v, u)) out.push_back(u);
    return out;
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  }
  std::uint64_t& word(int v, std::size_t w) {
    return bits_[static_cast<std::size_t>(v) * words_ + w];
  }
  std::uint64_t word(int v, std::size_t w) const {
    return bits_[static_cast<std::size_t>(v) * words_ + w];
  }

  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> deg_;
  long long m_;
};

/// Thrown by parse_edge_list with a 1-based line number.
class EdgeListParseError : public std::runtime_error {
 public:
  EdgeListParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format: optional first line "# n=<int>", then "u v" per line with
// 0-based decimal indices. Duplicate edges collapse; self-loops reject.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long header_n = -1;
  std::vector<std::pair<int, int>> edges;
  int max_index = -1;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (first && line.rfind("# n=", 0) == 0) {
      first = false;
      try {
        std::size_t pos = 0;
        header_n = std::stoll(line.substr(4), &pos);
        if (pos != line.size() - 4 || header_n < 0)
          throw std::invalid_argument("bad");
      } catch (const std::exception&) {
        throw EdgeListParseError(lineno, "malformed header: " + line);
      }
      continue;
    }
    first = false;
    std::istringstream ls(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      throw EdgeListParseError(lineno, "expected \"u v\": " + line);
    if (u < 0 || v < 0)
      throw EdgeListParseError(lineno, "negative vertex index");
    if (u == v) throw EdgeListParseError(lineno, "self-loop rejected");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_index = std::max(max_index, static_cast<int>(std::max(u, v)));
  }
  long long n = header_n >= 0 ? header_n : max_index + 1;
  if (max_index >= n)
    throw EdgeListParseError(
        0, "vertex index " + std::to_string(max_index) +
               " exceeds declared n=" + std::to_string(n));
  Graph g(static_cast<int>(n));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.n() << "\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v)) out << u << " " << v << "\n";
  return out.str();
}

/// Parameterized family of named graphs; use the factory functions.
struct GraphFamilySpec {
  enum class Family {
    Complete,
    Turan,
    UnionCliques,
    CompleteBipartite,
    ErdosRenyi,
    Circulant,
    Paley,
    CompleteMinusClique,
  };

  Family family{Family::Complete};
  int n = 0;
  int r = 0;                        // turan
  std::vector<int> sizes;           // union_cliques
  int a = 0, b = 0;                 // complete_bipartite
  double p = 0.0;                   // erdos_renyi
  std::uint64_t seed = 0;           // erdos_renyi
  std::vector<int> connections;     // circulant, positive half
  int q = 0;                        // paley
  int k = 0;                        // complete_minus_clique

  static GraphFamilySpec complete(int n) {
    GraphFamilySpec s;
    s.family = Family::Complete;
    s.n = n;
    return s;
  }
  static GraphFamilySpec turan(int n, int r) {
    GraphFamilySpec s;
    s.family = Family::Turan;
    s.n = n;
    s.r = r;
    return s;
  }
  static GraphFamilySpec union_cliques(std::vector<int> sizes) {
    GraphFamilySpec s;
    s.family = Family::UnionCliques;
    s.sizes = std::move(sizes);
    s.n = std::accumulate(s.sizes.begin(), s.sizes.end(), 0);
    return s;
  }
  static GraphFamilySpec complete_bipartite(int a, int b) {
    GraphFamilySpec s;
    s.family = Family::CompleteBipartite;
    s.a = a;
    s.b = b;
    s.n = a + b;
    return s;
  }
  static GraphFamilySpec erdos_renyi(int n, double p, std::uint64_t seed) {
    GraphFamilySpec s;
    s.family = Family::ErdosRenyi;
    s.n = n;
    s.p = p;
    s.seed = seed;
    return s;
  }
  // connections holds the positive half {s1 < s2 < ...}; the set is
  // symmetrized internally.
  static GraphFamilySpec circulant(int n, std::vector<int> connections) {
    GraphFamilySpec s;
    s.family = Family::Circulant;
    s.n = n;
    s.connections = std::move(connections);
    return s;
  }
  static GraphFamilySpec paley(int q) {
    GraphFamilySpec s;
    s.family = Family::Paley;
    s.q = q;
    s.n = q;
    return s;
  }
  static GraphFamilySpec complete_minus_clique(int n, int k) {
    GraphFamilySpec s;
    s.family = Family::CompleteMinusClique;
    s.n = n;
    s.k = k;
    return s;
  }
};

namespace detail {

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace detail

inline Graph generate(const GraphFamilySpec& spec) {
  using Family = GraphFamilySpec::Family;
  switch (spec.family) {
    case Family::Complete: {
      Graph g(spec.n);
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v) g.add_edge(u, v);
      return g;
    }
    case Family::Turan: {
      if (spec.r < 1) throw std::invalid_argument("turan: r must be >= 1");
      if (spec.n < 0) throw std::invalid_argument("turan: n must be >= 0");
      // balanced parts, contiguous blocks, first n mod r parts get the
      // larger size
      std::vector<int> part(static_cast<std::size_t>(spec.n));
      int base = spec.r > 0 ? spec.n / spec.r : 0;
      int extra = spec.r > 0 ? spec.n % spec.r : 0;
      int v = 0;
      for (int pid = 0; pid < spec.r && v < spec.n; ++pid) {
        int sz = base + (pid < extra ? 1 : 0);
        for (int i = 0; i < sz; ++i) part[static_cast<std::size_t>(v++)] = pid;
      }
      Graph g(spec.n);
      for (int u = 0; u < spec.n; ++u)
        for (int w = u + 1; w < spec.n; ++w)
          if (part[static_cast<std::size_t>(u)] !=
              part[static_cast<std::size_t>(w)])
            g.add_edge(u, w);
      return g;
    }
    case Family::UnionCliques: {
      for (int s : spec.sizes)
        if (s < 1)
          throw std::invalid_argument("union_cliques: sizes must be >= 1");
      Graph g(spec.n);
      int base = 0;
      for (int s : spec.sizes) {
        for (int u = 0; u < s; ++u)
          for (int v = u + 1; v < s; ++v) g.add_edge(base + u, base + v);
        base += s;
      }
      return g;
    }
    case Family::CompleteBipartite: {
      if (spec.a < 0 || spec.b < 0)
        throw std::invalid_argument("complete_bipartite: negative side");
      Graph g(spec.a + spec.b);
      for (int u = 0; u < spec.a; ++u)
        for (int v = 0; v < spec.b; ++v) g.add_edge(u, spec.a + v);
      return g;
    }
    case Family::ErdosRenyi: {
      if (spec.p < 0.0 || spec.p > 1.0)
        throw std::invalid_argument("erdos_renyi: p outside [0,1]");
      Graph g(spec.n);
      std::uint64_t counter = 0;
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v)
          if (rng::uniform(spec.seed, counter++) < spec.p) g.add_edge(u, v);
      return g;
    }
    case Family::Circulant: {
      if (spec.n < 1) throw std::invalid_argument("circulant: n must be >= 1");
      for (int s : spec.connections)
        if (s <= 0 || s >= spec.n)
          throw std::invalid_argument("circulant: connection out of (0, n)");
      Graph g(spec.n);
      for (int s : spec.connections)
        for (int u = 0; u < spec.n; ++u) g.add_edge(u, (u + s) % spec.n);
      return g;
    }
    case Family::Paley: {
      if (!detail::is_prime(spec.q) || spec.q % 4 != 1)
        throw std::invalid_argument("paley: q must be a prime = 1 mod 4");
      std::vector<bool> qr(static_cast<std::size_t>(spec.q), false);
      for (long long x = 1; x < spec.q; ++x)
        qr[static_cast<std::size_t>((x * x) % spec.q)] = true;
      Graph g(spec.q);
      for (int u = 0; u < spec.q; ++u)
        for (int v = u + 1; v < spec.q; ++v)
          if (qr[static_cast<std::size_t>((v - u) % spec.q)]) g.add_edge(u, v);
      return g;
    }
    case Family::CompleteMinusClique: {
      if (spec.k < 0 || spec.k > spec.n)
        throw std::invalid_argument("complete_minus_clique: k outside [0,n]");
      Graph g(spec.n);
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v)
          if (u >= spec.k || v >= spec.k) g.add_edge(u, v);
      return g;
    }
  }
  throw std::invalid_argument("unknown family");
}

// Relabels the kept vertices 0..|s|-1 by ascending original index.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> keep = s;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep)
    if (v < 0 || v >= g.n())
      throw std::out_of_range("induced_subgraph: vertex out of range");
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j]))
        h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

inline long long triangle_count(const Graph& g) {
  long long thrice = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v)) thrice += g.common_neighbors(u, v);
  return thrice / 3;
}

// Induced K_{1,2} count: sum_v C(deg v, 2) - 3 t(G).
inline long long cherry_count(const Graph& g) {
  long long paths = 0;
  for (int v = 0; v < g.n(); ++v) {
    long long d = g.deg(v);
    paths += d * (d - 1) / 2;
  }
  return paths - 3 * triangle_count(g);
}

inline int degeneracy(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n()));
  std::vector<bool> removed(static_cast<std::size_t>(g.n()), false);
  for (int v = 0; v < g.n(); ++v) deg[static_cast<std::size_t>(v)] = g.deg(v);
  int degen = 0;
  for (int step = 0; step < g.n(); ++step) {
    int best = -1;
    for (int v = 0; v < g.n(); ++v)
      if (!removed[static_cast<std::size_t>(v)] &&
          (best < 0 || deg[static_cast<std::size_t>(v)] <
                           deg[static_cast<std::size_t>(best)]))
        best = v;
    degen = std::max(degen, deg[static_cast<std::size_t>(best)]);
    removed[static_cast<std::size_t>(best)] = true;
    for (int u = 0; u < g.n(); ++u)
      if (!removed[static_cast<std::size_t>(u)] && g.has_edge(best, u))
        --deg[static_cast<std::size_t>(u)];
  }
  return degen;
}

/// Edge density p(G) = 2m / n^2.
inline double density(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("density: empty vertex set");
  return 2.0 * static_cast<double>(g.m()) /
         (static_cast<double>(g.n()) * static_cast<double>(g.n()));
}

}  // namespace specgraph
