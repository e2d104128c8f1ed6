#include "tperfect/graph.hpp"

#include <algorithm>

namespace tperfect {

namespace {

std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw GraphError("negative vertex-set universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (const int rem = universe % 64; rem != 0) s.words_.back() = (std::uint64_t{1} << rem) - 1;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_)
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(universe_));
  words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe_) return;
  words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return -1;
}

Vertex VertexSet::next(Vertex v) const {
  const Vertex start = v + 1;
  if (start >= universe_) return -1;
  std::size_t w = static_cast<std::size_t>(start) >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w >= words_.size()) return -1;
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (other.universe_ != universe_)
    throw GraphError("vertex sets over different universes (" + std::to_string(universe_) + " vs " +
                     std::to_string(other.universe_) + ")");
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  if (order < 0) throw GraphError("negative vertex count " + std::to_string(order));
  std::vector<VertexSet> adj(static_cast<std::size_t>(order), VertexSet(order));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw GraphError("edge " + pair_text(u, v) + " has an endpoint outside 0.." + std::to_string(order - 1));
    if (u == v) throw GraphError("self-loop " + pair_text(u, v));
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  return from_adjacency(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
  Graph g;
  std::size_t degree_sum = 0;
  for (const auto& row : adjacency) degree_sum += static_cast<std::size_t>(row.size());
  g.adjacency_ = std::move(adjacency);
  g.edge_count_ = degree_sum / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v)) out.emplace_back(u, v);
  return out;
}

Graph build_graph(int order, std::span<const Edge> edges) { return Graph::from_edges(order, edges); }

std::vector<Vertex> InducedSubgraph::host_of(std::span<const Vertex> vs) const {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(host_of(v));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order())
    throw GraphError("vertex set universe " + std::to_string(keep.universe()) + " does not match graph order " +
                     std::to_string(g.order()));
  InducedSubgraph out;
  out.to_host = keep.members();
  const int k = static_cast<int>(out.to_host.size());
  std::vector<Vertex> to_local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < k; ++i) to_local[static_cast<std::size_t>(out.to_host[static_cast<std::size_t>(i)])] = i;
  std::vector<VertexSet> adj(static_cast<std::size_t>(k), VertexSet(k));
  for (int i = 0; i < k; ++i) {
    const VertexSet inside = g.neighbors(out.to_host[static_cast<std::size_t>(i)]) & keep;
    inside.for_each([&](Vertex h) { adj[static_cast<std::size_t>(i)].insert(to_local[static_cast<std::size_t>(h)]); });
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  return induced_subgraph(g, g.vertices() - removed);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const VertexSet all = VertexSet::full(n);
  std::vector<VertexSet> adj;
  adj.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    VertexSet row = all - g.neighbors(v);
    row.erase(v);
    adj.push_back(std::move(row));
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph duplicate_vertex(const Graph& g, Vertex v, int copies) {
  if (!g.has_vertex(v)) throw GraphError("cannot duplicate vertex " + std::to_string(v) + ": not in graph");
  if (copies < 1) throw GraphError("copy count must be at least 1");
  std::vector<Edge> edges = g.edges();
  const int n = g.order();
  const std::vector<Vertex> nbrs = g.neighbors(v).members();
  for (int c = 0; c < copies; ++c)
    for (Vertex u : nbrs) edges.emplace_back(n + c, u);
  return Graph::from_edges(n + copies, edges);
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw GraphError("vertex set does not belong to this graph");
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw GraphError("vertex set does not belong to this graph");
  bool ok = true;
  s.for_each([&](Vertex v) {
    VertexSet others = s;
    others.erase(v);
    ok = ok && others.is_subset_of(g.neighbors(v));
  });
  return ok;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet grown(g.order());
      frontier.for_each([&](Vertex v) { grown |= g.neighbors(v); });
      frontier = grown - comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

VertexSet make_vertex_set(const Graph& g, std::span<const Vertex> members) {
  VertexSet s(g.order());
  for (Vertex v : members) {
    if (!g.has_vertex(v))
      throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
    s.insert(v);
  }
  return s;
}

}  // namespace tperfect
