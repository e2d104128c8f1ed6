#pragma once
// Brute-force reference implementations. Deliberately naive: no pruning,
// no memoization, nothing shared with the library beyond Graph itself.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "tperfect/graph.hpp"
#include "tperfect/polytope.hpp"

namespace oracle {

using tperfect::Graph;
using tperfect::Vertex;

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

inline bool is_iso_under(const Graph& a, const Graph& b, const std::vector<int>& p) {
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = u + 1; v < a.order(); ++v)
      if (a.adjacent(u, v) != b.adjacent(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)])) return false;
  return true;
}

// Tries every permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  std::vector<int> p(static_cast<std::size_t>(a.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_iso_under(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Graph induced(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<tperfect::Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph::from_edges(static_cast<int>(keep.size()), edges);
}

inline std::vector<Vertex> members(unsigned mask, int n) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1U) out.push_back(v);
  return out;
}

inline bool contains_induced(const Graph& host, const Graph& pattern) {
  const int n = host.order(), k = pattern.order();
  for (unsigned mask = 0; mask < (1U << n); ++mask)
    if (std::popcount(mask) == k && isomorphic(induced(host, members(mask, n)), pattern)) return true;
  return false;
}

inline bool independent(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

inline std::vector<std::vector<Vertex>> independent_sets(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (unsigned mask = 0; mask < (1U << g.order()); ++mask) {
    auto s = members(mask, g.order());
    if (independent(g, s)) out.push_back(s);
  }
  return out;
}

inline std::set<std::vector<Vertex>> maximal_independent_sets(const Graph& g) {
  std::set<std::vector<Vertex>> out;
  for (auto& s : independent_sets(g)) {
    bool maximal = true;
    for (Vertex v = 0; v < g.order() && maximal; ++v) {
      if (std::find(s.begin(), s.end(), v) != s.end()) continue;
      auto t = s;
      t.push_back(v);
      if (independent(g, t)) maximal = false;
    }
    if (maximal) out.insert(s);
  }
  return out;
}

inline std::int64_t alpha_w(const Graph& g, const std::vector<std::int64_t>& w) {
  std::int64_t best = 0;
  for (auto& s : independent_sets(g)) {
    std::int64_t t = 0;
    for (Vertex v : s) t += w[static_cast<std::size_t>(v)];
    best = std::max(best, t);
  }
  return best;
}

// Vertex sets of induced cycles (connected, 2-regular) of odd length >= min_len.
inline std::set<std::vector<Vertex>> induced_odd_cycles(const Graph& g, int min_len) {
  std::set<std::vector<Vertex>> out;
  const int n = g.order();
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int k = std::popcount(mask);
    if (k < min_len || k % 2 == 0) continue;
    auto s = members(mask, n);
    Graph h = induced(g, s);
    bool two_regular = true;
    for (Vertex v = 0; v < k; ++v) two_regular = two_regular && h.degree(v) == 2;
    if (two_regular && tperfect::is_connected(h)) out.insert(s);
  }
  return out;
}

// Vertex sets of all odd cycles (not necessarily induced) as cyclic sequences,
// one per vertex set and Hamiltonian cycle up to rotation/reflection.
inline std::vector<std::vector<Vertex>> all_odd_cycles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int k = std::popcount(mask);
    if (k < 3 || k % 2 == 0) continue;
    auto s = members(mask, n);
    // Fix s[0] first; permute the rest; keep one orientation.
    std::vector<Vertex> rest(s.begin() + 1, s.end());
    do {
      if (rest.front() > rest.back()) continue;
      std::vector<Vertex> c{s[0]};
      c.insert(c.end(), rest.begin(), rest.end());
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = g.adjacent(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>((i + 1) % k)]);
      if (ok) out.push_back(c);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

// t-contraction of v, keeping labels of survivors in order; merged vertex at v's slot.
inline std::optional<Graph> t_contract(const Graph& g, Vertex v) {
  const auto nb = g.neighbors(v).members();
  if (!independent(g, nb)) return std::nullopt;
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < g.order(); ++x)
    if (!g.adjacent(v, x)) keep.push_back(x);
  std::vector<tperfect::Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      const Vertex a = keep[i], b = keep[j];
      bool e = g.adjacent(a, b);
      auto near = [&](Vertex x) {
        for (Vertex u : nb)
          if (g.adjacent(u, x)) return true;
        return false;
      };
      if (a == v) e = e || near(b);
      if (b == v) e = e || near(a);
      if (e) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return Graph::from_edges(static_cast<int>(keep.size()), edges);
}

inline Graph odd_wheel(int rim) {
  std::vector<tperfect::Edge> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  return Graph::from_edges(rim + 1, e);
}

inline Graph cycle_square(int l) {
  std::vector<tperfect::Edge> e;
  for (int i = 0; i < l; ++i) {
    e.emplace_back(i, (i + 1) % l);
    e.emplace_back(i, (i + 2) % l);
  }
  return Graph::from_edges(l, e);
}

inline bool is_forbidden_target(const Graph& g) {
  const int n = g.order();
  if (n >= 4 && n % 2 == 0 && isomorphic(g, odd_wheel(n - 1))) return true;
  if (n == 7 && isomorphic(g, cycle_square(7))) return true;
  if (n == 10 && isomorphic(g, cycle_square(10))) return true;
  return false;
}

// Every induced subgraph, then every sequence of t-contractions; no memo.
inline bool has_forbidden_t_minor(const Graph& g) {
  std::function<bool(const Graph&)> contract_all = [&](const Graph& h) {
    if (is_forbidden_target(h)) return true;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (h.degree(v) < 2) continue;
      if (auto c = t_contract(h, v); c && contract_all(*c)) return true;
    }
    return false;
  };
  const int n = g.order();
  for (unsigned mask = 0; mask < (1U << n); ++mask)
    if (std::popcount(mask) >= 4 && contract_all(induced(g, members(mask, n)))) return true;
  return false;
}

// Vertices of {x : Ax <= b} by trying every n-subset of rows: solve the
// square system exactly, keep feasible unique solutions.
inline std::set<tperfect::RationalVector> polytope_vertices(const tperfect::ConstraintSystem& sys) {
  using tperfect::Rational;
  const int n = sys.variables;
  const int m = static_cast<int>(sys.constraints.size());
  std::set<tperfect::RationalVector> out;
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
      for (int i = 0; i < n; ++i) {
        const auto& row = sys.constraints[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
        for (int j = 0; j < n; ++j) a[i][j] = row.coefficients[static_cast<std::size_t>(j)];
        a[i][n] = row.rhs;
      }
      for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return;  // singular
        std::swap(a[p], a[c]);
        for (int r = 0; r < n; ++r) {
          if (r == c || a[r][c] == 0) continue;
          const Rational f = a[r][c] / a[c][c];
          for (int j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
        }
      }
      tperfect::RationalVector x(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
      if (sys.satisfied_by(x)) out.insert(x);
      return;
    }
    for (int r = start; r <= m - (n - depth); ++r) {
      pick[static_cast<std::size_t>(depth)] = r;
      rec(r + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

inline bool has_fork(const Graph& g) {
  static const Graph fork = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  return contains_induced(g, fork);
}

inline int chromatic_number(const Graph& g) {
  const int n = g.order();
  for (int k = 0;; ++k) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    // Odometer over all k^n assignments.
    if (n == 0) return 0;
    if (k == 0) continue;
    while (true) {
      bool ok = true;
      for (const auto& [u, v] : g.edges()) ok = ok && c[u] != c[v];
      if (ok) return k;
      int i = 0;
      while (i < n && ++c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
    }
  }
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<tperfect::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

}  // namespace oracle
