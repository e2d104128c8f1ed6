#pragma once

#include <optional>
#include <vector>

#include "tperfect/graph.hpp"
#include "tperfect/holes.hpp"

namespace tperfect {

enum class ColoringBranch { Perfect, ClawFree, U3Empty, U5Empty, U5PlusNonempty };
const char* to_string(ColoringBranch b);

struct ComponentColoring {
  std::vector<Vertex> vertices;  // host labels
  ColoringBranch branch = ColoringBranch::Perfect;
  /// Structural branches: the renumbered five-hole v1..v5 (host labels) the
  /// partition was read from.
  std::optional<Hole> hole;
};

struct Coloring {
  /// Colour of each vertex, in 0..color_count()-1.
  std::vector<int> colors;
  std::vector<ComponentColoring> components;

  int color_count() const;
  /// Colour classes indexed by colour.
  std::vector<VertexSet> classes() const;
  bool is_proper(const Graph& g) const;
  /// First structural branch among the components, otherwise the first
  /// component's branch (Perfect for the empty graph).
  ColoringBranch branch() const;
};

/// Proper colouring with at most k colours, or nullopt. Backtracking seeded
/// with a maximum clique.
std::optional<Coloring> exact_k_color(const Graph& g, int k);

/// Colours a graph that recognize() accepts with at most three colours.
/// Throws PreconditionError if the graph is not recognized as t-perfect and
/// std::logic_error if the structural case analysis runs out of cases.
Coloring three_color(const Graph& g);

}  // namespace tperfect
