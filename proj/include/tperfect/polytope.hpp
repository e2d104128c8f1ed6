#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tperfect/graph.hpp"

namespace tperfect {

/// Exact rational, always reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// "p/q", or "p" for integers.
std::string format_rational(const Rational& r);
std::string format_vector(const RationalVector& x);

enum class ConstraintKind { LowerBound, UpperBound, Edge, OddCycle };
const char* to_string(ConstraintKind kind);

/// One row coefficients · x <= rhs. `support` is the vertex of a bound, the
/// two ends of an edge, or the cycle in cyclic order.
struct Constraint {
  ConstraintKind kind = ConstraintKind::LowerBound;
  std::vector<int> coefficients;
  int rhs = 0;
  std::vector<Vertex> support;
};

struct ConstraintSystem {
  int variables = 0;
  std::vector<Constraint> constraints;

  std::size_t count(ConstraintKind kind) const;
  bool satisfied_by(const RationalVector& x) const;
  /// Indices of the rows holding with equality at x.
  std::vector<std::size_t> tight_rows(const RationalVector& x) const;
};

/// 0 <= x_v <= 1, x_u + x_v <= 1 per edge, x(V(C)) <= (|C|-1)/2 per induced
/// odd cycle (triangles included).
ConstraintSystem build_system(const Graph& g);
/// Appends the row of an arbitrary odd cycle given in cyclic order.
void add_odd_cycle_row(ConstraintSystem& system, std::span<const Vertex> cycle);

/// All vertices of the polytope {x : system}, sorted lexicographically.
/// The system must contain the bound rows 0 <= x <= 1.
std::vector<RationalVector> enumerate_vertices(const ConstraintSystem& system);

/// True iff every vertex of P(G) is 0/1. When true, also checks that the
/// vertices are exactly the characteristic vectors of the independent sets
/// and throws std::logic_error otherwise.
bool t_perfect_oracle(const Graph& g);

/// Rank of the given rows' coefficient vectors (exact).
int row_rank(const ConstraintSystem& system, std::span<const std::size_t> rows);

/// Nonnegative integer vertex weights.
struct Weighting {
  std::vector<std::int64_t> values;

  Weighting() = default;
  explicit Weighting(std::vector<std::int64_t> v);
  static Weighting uniform(int order, std::int64_t value);
  std::int64_t operator[](Vertex v) const { return values[static_cast<std::size_t>(v)]; }
  int size() const { return static_cast<int>(values.size()); }
  std::string to_string() const;
  bool operator==(const Weighting&) const = default;
};

/// Maximum weight of an independent set (branch and bound).
std::int64_t alpha_w(const Graph& g, const Weighting& w);
/// An independent set attaining alpha_w.
VertexSet max_weight_independent_set(const Graph& g, const Weighting& w);

struct CoverElement {
  enum class Kind { Vertex, Edge, OddCycle };
  Kind kind = Kind::Vertex;
  /// Sorted vertex set; for odd cycles see `cycle`.
  std::vector<Vertex> vertices;
  /// Odd cycles: a Hamiltonian cycle of G[vertices] in cyclic order.
  std::vector<Vertex> cycle;

  std::int64_t cost() const;
  std::string to_string() const;
  bool operator==(const CoverElement&) const = default;
};

struct WCover {
  std::vector<std::pair<CoverElement, std::int64_t>> elements;  // element, multiplicity
  std::int64_t cost = 0;

  /// Elements are genuine vertices/edges/odd cycles of g and every v is
  /// covered at least w(v) times; the cost tally matches.
  bool is_valid_for(const Graph& g, const Weighting& w) const;
};

/// Minimum-cost w-cover over vertices, edges and all odd cycles (not only
/// induced ones). Exact; intended for order <= ~10 and small weights.
/// Ties are broken by the order vertices < edges < odd cycles, then
/// lexicographically.
WCover min_w_cover(const Graph& g, const Weighting& w);

struct StrongCheckReport {
  int w_max = 0;
  std::size_t weightings_checked = 0;
  bool passed = true;
  std::optional<Weighting> violation;
  std::int64_t alpha = 0;
  std::int64_t cover_cost = 0;
  /// "pass up to w_max = K" or a description of the violation.
  std::string summary() const;
};

/// For every w in {0..w_max}^V checks min_w_cover cost == alpha_w; stops at
/// the first violation (weightings in lexicographic order).
StrongCheckReport strong_t_perfect_check(const Graph& g, int w_max);

}  // namespace tperfect
