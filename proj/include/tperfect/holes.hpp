#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tperfect/graph.hpp"

namespace tperfect {

/// Cyclic vertex sequence v1..vl of a host graph; positions are taken
/// modulo the length.
struct Hole {
  std::vector<Vertex> cycle;

  int length() const { return static_cast<int>(cycle.size()); }
  /// 0-based position, any integer accepted.
  Vertex at(int position) const {
    const int l = length();
    return cycle[static_cast<std::size_t>(((position % l) + l) % l)];
  }
  /// 1-based index v_i, any integer accepted.
  Vertex v(int i) const { return at(i - 1); }
  VertexSet vertex_set(int universe) const { return VertexSet(universe, cycle); }

  bool operator==(const Hole&) const = default;
  auto operator<=>(const Hole&) const = default;
};

/// Consecutive vertices adjacent, all other pairs nonadjacent, distinct
/// vertices, length at least 3.
bool is_induced_cycle(const Graph& g, const Hole& h);

/// All induced odd cycles with min_len <= length <= max_len (max_len
/// defaults to the order), each once. Cycles are reported starting at their
/// smallest vertex and oriented so the second vertex is smaller than the
/// last; the list is sorted by length, then lexicographically.
std::vector<Hole> enumerate_induced_odd_cycles(const Graph& g, int min_len, std::optional<int> max_len = std::nullopt);

/// The ten dihedral relabellings of a five-hole, as 0-based positions: the
/// five reflections p -> r - p for r = 0..4, then the five rotations p -> p + r.
std::array<Hole, 10> five_hole_symmetries(const Hole& h);

/// Outcome of the neighbour test around a five-hole. On failure, `witness`
/// is the smallest offending vertex and `positions` its 0-based neighbour
/// positions on the hole.
struct StarCheck {
  bool satisfied = true;
  std::optional<Vertex> witness;
  std::vector<int> positions;
  std::string reason;
};

/// Every vertex of the hole's component outside the hole must have exactly
/// two consecutive or exactly three nonconsecutive neighbours on it; this
/// also rules out vertices with no neighbour on the hole.
StarCheck satisfies_star(const Graph& g, const Hole& h);

/// U_1..U_5 around a five-hole, restricted to the hole's component. U_i holds
/// the common neighbours of v_{i+2} and v_{i+3}; U_i^+ those also adjacent to
/// v_i. Indices are 1-based and taken modulo 5.
struct HolePartition {
  Hole hole;
  VertexSet component;
  std::array<VertexSet, 5> parts;
  std::array<VertexSet, 5> plus;
  std::array<VertexSet, 5> minus;

  static int slot(int i) { return ((i - 1) % 5 + 5) % 5; }
  const VertexSet& U(int i) const { return parts[static_cast<std::size_t>(slot(i))]; }
  const VertexSet& U_plus(int i) const { return plus[static_cast<std::size_t>(slot(i))]; }
  const VertexSet& U_minus(int i) const { return minus[static_cast<std::size_t>(slot(i))]; }
};

class PartitionError : public std::runtime_error {
 public:
  explicit PartitionError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Throws PartitionError listing every unclassifiable vertex, every
/// non-independent part and every |U_i^-| >= 2.
HolePartition hole_partition(const Graph& g, const Hole& h);

struct StructureClause {
  std::string clause;  // "i".."v"
  int index = 0;       // the i with U_i^+ nonempty
  bool passed = true;
  std::vector<Vertex> witness;
  std::string detail;
};

struct StructureReport {
  std::vector<StructureClause> clauses;
  bool all_passed() const;
  std::vector<StructureClause> failures() const;
};

/// Checks, for each i with U_i^+ nonempty:
///  (i)   U_i complete to U_{i-2} and U_{i+2};
///  (ii)  U_i complete to U_{i-1}^- and U_{i+1}^-;
///  (iii) U_{i+1}^- complete to U_{i+2}^- (and the mirror U_{i-1}^- to U_{i-2}^-);
///  (iv)  U_{i+2} or U_{i-2} empty;
///  (v)   each vertex of U_i^+ has at most one non-neighbour in U_{i-1}^+ and
///        at most one in U_{i+1}^+.
StructureReport validate_structure(const Graph& g, const HolePartition& p);

/// All maximal independent sets, sorted by their member lists.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

}  // namespace tperfect
