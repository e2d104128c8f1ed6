#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tperfect/graph.hpp"

namespace tperfect {

enum class PatternKind { Claw, Fork, Cycle, Path, Complete, Wheel, C7Squared, C10Squared, Figure3, Figure4 };

/// The three five-hole configurations used as duplication bases: (a) with
/// u2+ and u4+, (b) with u2+ alone, (c) with u2+, u3+ and u5-.
enum class Figure3Variant { A, B, C };

/// A named graph with its parameters.
///
/// Vertex numbering of the constructions:
///  - cycle(l), path(l): 0..l-1 in order; wheel(l): rim 0..l-1, hub l.
///  - claw: centre 0, leaves 1..3; fork: claw plus pendant 4 on leaf 3.
///  - c7_squared / c10_squared: rim 0..l-1, i adjacent to i±1 and i±2.
///  - figure3: hole v1..v5 as 0..4, then the u-vertices (see figure3_labels).
///  - figure4: hole v1..v7 as 0..6, u = 7 adjacent to v1, v2, v5, v6.
struct PatternName {
  PatternKind kind = PatternKind::Claw;
  int length = 0;
  Figure3Variant variant = Figure3Variant::A;
  /// Bit i set: optional vertex u_i^- present (i in 1..4).
  unsigned optional_minus = 0;

  static PatternName claw() { return {PatternKind::Claw}; }
  static PatternName fork() { return {PatternKind::Fork}; }
  static PatternName cycle(int l) { return {PatternKind::Cycle, l}; }
  static PatternName path(int l) { return {PatternKind::Path, l}; }
  static PatternName complete(int l) { return {PatternKind::Complete, l}; }
  static PatternName wheel(int l) { return {PatternKind::Wheel, l}; }
  static PatternName c7_squared() { return {PatternKind::C7Squared}; }
  static PatternName c10_squared() { return {PatternKind::C10Squared}; }
  static PatternName figure3(Figure3Variant v, std::initializer_list<int> optional = {});
  static PatternName figure4() { return {PatternKind::Figure4}; }

  bool has_optional(int i) const { return ((optional_minus >> i) & 1U) != 0; }

  /// "claw", "fork", "C5", "P4", "K4", "W5", "C7^2", "C10^2", "figure3a[2,4]", "figure4".
  std::string to_string() const;
  /// Inverse of to_string; throws GraphError on unknown names.
  static PatternName parse(const std::string& text);

  bool operator==(const PatternName&) const = default;
};

Graph named_graph(const PatternName& name);

/// Vertex names of a figure3 construction, e.g. {"v1",...,"v5","u2+","u4+","u3-"}.
std::vector<std::string> figure3_labels(const PatternName& name);

/// Injective map pattern vertex -> host vertex preserving edges and non-edges.
struct Embedding {
  std::vector<Vertex> image;
  bool operator==(const Embedding&) const = default;
};

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);
bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding);

struct PatternMatch {
  PatternName name;
  Embedding embedding;
};

/// First pattern in `names` (in order) that occurs as an induced subgraph.
std::optional<PatternMatch> find_any_induced(const Graph& host, std::span<const PatternName> names);

bool is_fork_free(const Graph& g);
bool contains_claw(const Graph& g);
/// K4, W5, C7^2, C10^2: the induced obstructions checked first by recognition.
const std::vector<PatternName>& small_obstructions();
std::optional<PatternMatch> find_small_obstruction(const Graph& g);
/// Smallest induced odd wheel W_{2k+1} with 2k+2 <= order.
std::optional<PatternMatch> find_odd_wheel(const Graph& g);

}  // namespace tperfect
