#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace tperfect {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph input: out-of-range labels, self-loops and
/// similar construction errors.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Subset of the vertex labels 0..universe-1 of some graph, stored as a
/// bitset. Orders up to 64 stay inline.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ &&
           ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const;
  bool empty() const;
  /// Smallest member, or -1 when empty.
  Vertex first() const;
  /// Smallest member greater than `v`, or -1.
  Vertex next(Vertex v) const;
  std::vector<Vertex> members() const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& other) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_same_universe(const VertexSet& other) const;

  int universe_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

/// Simple undirected graph on the vertices 0..order-1. Immutable once built;
/// every transformation returns a fresh graph.
class Graph {
 public:
  Graph() = default;

  /// Deduplicates edges; rejects self-loops and out-of-range endpoints.
  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Builds from symmetric neighbourhoods without re-validating them.
  static Graph from_adjacency(std::vector<VertexSet> adjacency);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return neighbors(v).size(); }
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::full(order()); }
  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

Graph build_graph(int order, std::span<const Edge> edges);

/// Induced subgraph with dense relabelling. `to_host[i]` is the host label of
/// vertex i of `graph`; labels keep their relative order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;

  Vertex host_of(Vertex v) const { return to_host[static_cast<std::size_t>(v)]; }
  std::vector<Vertex> host_of(std::span<const Vertex> vs) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);

Graph complement(const Graph& g);

/// Adds `copies` new vertices (labels order..order+copies-1), each adjacent to
/// exactly N(v). Copies are pairwise nonadjacent and nonadjacent to v.
Graph duplicate_vertex(const Graph& g, Vertex v, int copies = 1);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

/// Connected components, ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Vertex set from a list of labels, validated against the graph.
VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> members);

}  // namespace tperfect
