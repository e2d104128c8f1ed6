#include "tperfect/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tperfect {

namespace {

Graph cycle_graph(int l) {
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) edges.emplace_back(i, (i + 1) % l);
  return Graph::from_edges(l, edges);
}

Graph squared_cycle(int l) {
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) {
    edges.emplace_back(i, (i + 1) % l);
    edges.emplace_back(i, (i + 2) % l);
  }
  return Graph::from_edges(l, edges);
}

// Hole vertex v_i (1-based, taken modulo 5) of a figure3 construction.
Vertex hole_vertex(int i) { return ((i - 1) % 5 + 5) % 5; }

// A u-vertex sitting in U_i: adjacent to v_{i+2}, v_{i+3}, and to v_i when
// it is a plus-vertex.
struct UVertex {
  int index;
  bool plus;
};

std::vector<UVertex> figure3_u_vertices(const PatternName& name) {
  std::vector<UVertex> us;
  switch (name.variant) {
    case Figure3Variant::A:
      us = {{2, true}, {4, true}};
      for (int i : {2, 3, 4})
        if (name.has_optional(i)) us.push_back({i, false});
      break;
    case Figure3Variant::B:
      us = {{2, true}};
      for (int i : {1, 2, 3, 4})
        if (name.has_optional(i)) us.push_back({i, false});
      break;
    case Figure3Variant::C:
      us = {{2, true}, {3, true}, {5, false}};
      break;
  }
  return us;
}

void check_figure3_flags(const PatternName& name) {
  unsigned allowed = 0;
  switch (name.variant) {
    case Figure3Variant::A: allowed = (1U << 2) | (1U << 3) | (1U << 4); break;
    case Figure3Variant::B: allowed = (1U << 1) | (1U << 2) | (1U << 3) | (1U << 4); break;
    case Figure3Variant::C: allowed = 0; break;
  }
  if ((name.optional_minus & ~allowed) != 0)
    throw GraphError("figure3 variant does not have the requested optional vertices: " + name.to_string());
}

// Two u-vertices are adjacent iff they lie in different parts. Most of these
// edges are forced by the structure around a five-hole; in (b) the pairs
// u1-u4- and u1-u3- are not, and both are drawn (without u1-u4- the graph
// with u1- and u4- contains a fork).
bool figure3_u_adjacent(const UVertex& a, const UVertex& b) { return a.index != b.index; }

Graph figure3_graph(const PatternName& name) {
  check_figure3_flags(name);
  const auto us = figure3_u_vertices(name);
  const int n = 5 + static_cast<int>(us.size());
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (std::size_t k = 0; k < us.size(); ++k) {
    const Vertex u = 5 + static_cast<Vertex>(k);
    edges.emplace_back(u, hole_vertex(us[k].index + 2));
    edges.emplace_back(u, hole_vertex(us[k].index + 3));
    if (us[k].plus) edges.emplace_back(u, hole_vertex(us[k].index));
    for (std::size_t l = 0; l < k; ++l)
      if (figure3_u_adjacent(us[k], us[l])) edges.emplace_back(u, 5 + static_cast<Vertex>(l));
  }
  return Graph::from_edges(n, edges);
}

Graph figure4_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 7; ++i) edges.emplace_back(i, (i + 1) % 7);
  for (int i : {1, 2, 5, 6}) edges.emplace_back(7, i - 1);
  return Graph::from_edges(8, edges);
}

char variant_letter(Figure3Variant v) {
  switch (v) {
    case Figure3Variant::A: return 'a';
    case Figure3Variant::B: return 'b';
    case Figure3Variant::C: return 'c';
  }
  return '?';
}

int parse_positive(const std::string& text, const std::string& whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw GraphError("cannot parse pattern name '" + whole + "'");
  return std::stoi(text);
}

}  // namespace

PatternName PatternName::figure3(Figure3Variant v, std::initializer_list<int> optional) {
  PatternName p{PatternKind::Figure3};
  p.variant = v;
  for (int i : optional) {
    if (i < 1 || i > 4) throw GraphError("figure3 optional vertex index must be in 1..4");
    p.optional_minus |= 1U << i;
  }
  return p;
}

std::string PatternName::to_string() const {
  switch (kind) {
    case PatternKind::Claw: return "claw";
    case PatternKind::Fork: return "fork";
    case PatternKind::Cycle: return "C" + std::to_string(length);
    case PatternKind::Path: return "P" + std::to_string(length);
    case PatternKind::Complete: return "K" + std::to_string(length);
    case PatternKind::Wheel: return "W" + std::to_string(length);
    case PatternKind::C7Squared: return "C7^2";
    case PatternKind::C10Squared: return "C10^2";
    case PatternKind::Figure4: return "figure4";
    case PatternKind::Figure3: {
      std::string s = std::string("figure3") + variant_letter(variant);
      if (optional_minus != 0) {
        s += "[";
        bool first = true;
        for (int i = 1; i <= 4; ++i) {
          if (!has_optional(i)) continue;
          if (!first) s += ",";
          s += std::to_string(i);
          first = false;
        }
        s += "]";
      }
      return s;
    }
  }
  return "?";
}

PatternName PatternName::parse(const std::string& text) {
  if (text == "claw") return claw();
  if (text == "fork") return fork();
  if (text == "C7^2" || text == "c7_squared") return c7_squared();
  if (text == "C10^2" || text == "c10_squared") return c10_squared();
  if (text == "figure4") return figure4();
  if (text.rfind("figure3", 0) == 0 && text.size() >= 8) {
    PatternName p{PatternKind::Figure3};
    switch (text[7]) {
      case 'a': p.variant = Figure3Variant::A; break;
      case 'b': p.variant = Figure3Variant::B; break;
      case 'c': p.variant = Figure3Variant::C; break;
      default: throw GraphError("unknown figure3 variant in '" + text + "'");
    }
    std::string rest = text.substr(8);
    if (!rest.empty()) {
      if (rest.front() != '[' || rest.back() != ']') throw GraphError("cannot parse pattern name '" + text + "'");
      std::stringstream items(rest.substr(1, rest.size() - 2));
      std::string item;
      while (std::getline(items, item, ',')) {
        const int i = parse_positive(item, text);
        if (i < 1 || i > 4) throw GraphError("figure3 optional vertex index must be in 1..4");
        p.optional_minus |= 1U << i;
      }
    }
    check_figure3_flags(p);
    return p;
  }
  if (text.size() >= 2) {
    const int l = parse_positive(text.substr(1), text);
    switch (text[0]) {
      case 'C': return cycle(l);
      case 'P': return path(l);
      case 'K': return complete(l);
      case 'W': return wheel(l);
      default: break;
    }
  }
  throw GraphError("unknown pattern name '" + text + "'");
}

Graph named_graph(const PatternName& name) {
  switch (name.kind) {
    case PatternKind::Claw: return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    case PatternKind::Fork: return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    case PatternKind::Cycle:
      if (name.length < 3) throw GraphError("cycle length must be at least 3");
      return cycle_graph(name.length);
    case PatternKind::Path: {
      if (name.length < 1) throw GraphError("path must have at least one vertex");
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < name.length; ++i) edges.emplace_back(i, i + 1);
      return Graph::from_edges(name.length, edges);
    }
    case PatternKind::Complete: {
      if (name.length < 1) throw GraphError("complete graph must have at least one vertex");
      std::vector<Edge> edges;
      for (int i = 0; i < name.length; ++i)
        for (int j = i + 1; j < name.length; ++j) edges.emplace_back(i, j);
      return Graph::from_edges(name.length, edges);
    }
    case PatternKind::Wheel: {
      if (name.length < 3) throw GraphError("wheel rim must have at least 3 vertices");
      std::vector<Edge> edges = cycle_graph(name.length).edges();
      for (int i = 0; i < name.length; ++i) edges.emplace_back(i, name.length);
      return Graph::from_edges(name.length + 1, edges);
    }
    case PatternKind::C7Squared: return squared_cycle(7);
    case PatternKind::C10Squared: return squared_cycle(10);
    case PatternKind::Figure3: return figure3_graph(name);
    case PatternKind::Figure4: return figure4_graph();
  }
  throw GraphError("unknown pattern kind");
}

std::vector<std::string> figure3_labels(const PatternName& name) {
  if (name.kind != PatternKind::Figure3) throw GraphError("figure3_labels needs a figure3 pattern");
  check_figure3_flags(name);
  std::vector<std::string> labels = {"v1", "v2", "v3", "v4", "v5"};
  for (const auto& u : figure3_u_vertices(name))
    labels.push_back("u" + std::to_string(u.index) + (u.plus ? "+" : "-"));
  return labels;
}

bool verify_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding) {
  const int p = pattern.order();
  if (static_cast<int>(embedding.image.size()) != p) return false;
  for (Vertex h : embedding.image)
    if (!host.has_vertex(h)) return false;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      const Vertex a = embedding.image[i];
      const Vertex b = embedding.image[j];
      if (a == b) return false;
      if (pattern.adjacent(i, j) != host.adjacent(a, b)) return false;
    }
  return true;
}

namespace {

class InducedMatcher {
 public:
  InducedMatcher(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
    const int p = pattern.order();
    // Connected-first order: each next pattern vertex has the most already
    // placed neighbours, which keeps candidate sets small.
    std::vector<bool> placed(p, false);
    for (int k = 0; k < p; ++k) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < p; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u : order_) links += pattern.adjacent(u, v) ? 1 : 0;
        if (links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      order_.push_back(best);
    }
    int max_degree = 0;
    for (int v = 0; v < p; ++v) max_degree = std::max(max_degree, pattern.degree(v));
    with_degree_.assign(max_degree + 1, VertexSet(host.order()));
    for (Vertex h = 0; h < host.order(); ++h)
      for (int d = 0; d <= std::min(max_degree, host.degree(h)); ++d) with_degree_[d].insert(h);
    image_.assign(p, -1);
  }

  std::optional<Embedding> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    VertexSet used(host_.order());
    if (extend(0, used)) return Embedding{image_};
    return std::nullopt;
  }

 private:
  bool extend(std::size_t k, VertexSet& used) {
    if (k == order_.size()) return true;
    const int pv = order_[k];
    VertexSet cand = with_degree_[pattern_.degree(pv)] - used;
    for (std::size_t j = 0; j < k && !cand.empty(); ++j) {
      const int pu = order_[j];
      if (pattern_.adjacent(pv, pu))
        cand &= host_.neighbors(image_[pu]);
      else
        cand -= host_.neighbors(image_[pu]);
    }
    for (Vertex h = cand.first(); h != -1; h = cand.next(h)) {
      image_[pv] = h;
      used.insert(h);
      if (extend(k + 1, used)) return true;
      used.erase(h);
    }
    image_[pv] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> order_;
  std::vector<VertexSet> with_degree_;
  std::vector<Vertex> image_;
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
  return InducedMatcher(host, pattern).run();
}

std::optional<PatternMatch> find_any_induced(const Graph& host, std::span<const PatternName> names) {
  for (const auto& name : names) {
    const Graph pattern = named_graph(name);
    if (pattern.order() > host.order()) continue;
    if (auto emb = find_induced(host, pattern)) return PatternMatch{name, std::move(*emb)};
  }
  return std::nullopt;
}

bool is_fork_free(const Graph& g) { return !find_induced(g, named_graph(PatternName::fork())).has_value(); }

bool contains_claw(const Graph& g) { return find_induced(g, named_graph(PatternName::claw())).has_value(); }

const std::vector<PatternName>& small_obstructions() {
  static const std::vector<PatternName> names = {PatternName::complete(4), PatternName::wheel(5),
                                                 PatternName::c7_squared(), PatternName::c10_squared()};
  return names;
}

std::optional<PatternMatch> find_small_obstruction(const Graph& g) { return find_any_induced(g, small_obstructions()); }

std::optional<PatternMatch> find_odd_wheel(const Graph& g) {
  std::vector<PatternName> wheels;
  for (int rim = 3; rim + 1 <= g.order(); rim += 2) wheels.push_back(PatternName::wheel(rim));
  return find_any_induced(g, wheels);
}

}  // namespace tperfect
