#include "tperfect/holes.hpp"

#include <algorithm>
#include <sstream>

namespace tperfect {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

void require_five_hole(const Graph& g, const Hole& h) {
  if (h.length() != 5) throw PreconditionError("expected a five-hole, got a cycle of length " + std::to_string(h.length()));
  if (!is_induced_cycle(g, h)) throw PreconditionError("vertex sequence is not an induced cycle of the graph");
}

VertexSet component_of(const Graph& g, const Hole& h) {
  VertexSet seen(g.order());
  std::vector<Vertex> stack(h.cycle.begin(), h.cycle.end());
  for (Vertex v : stack) seen.insert(v);
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    g.neighbors(v).for_each([&](Vertex w) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    });
  }
  return seen;
}

// Bitmask of 0-based hole positions adjacent to u.
unsigned hole_mask(const Graph& g, const Hole& h, Vertex u) {
  unsigned mask = 0;
  for (int i = 0; i < 5; ++i)
    if (g.adjacent(u, h.at(i))) mask |= 1U << i;
  return mask;
}

unsigned bits(std::initializer_list<int> positions) {
  unsigned m = 0;
  for (int p : positions) m |= 1U << (((p % 5) + 5) % 5);
  return m;
}

std::vector<int> positions_of(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; i < 5; ++i)
    if ((mask >> i) & 1U) out.push_back(i);
  return out;
}

std::string describe(unsigned mask) {
  switch (std::popcount(mask)) {
    case 0: return "no neighbour on the hole";
    case 1: return "exactly one neighbour on the hole";
    case 2: return "two nonconsecutive neighbours on the hole";
    case 3: return "three consecutive neighbours on the hole";
    default: return std::to_string(std::popcount(mask)) + " neighbours on the hole";
  }
}

std::string set_text(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](Vertex v) {
    out << (first ? "" : ",") << v;
    first = false;
  });
  out << '}';
  return out.str();
}

// First non-edge between a and b, if any.
std::optional<Edge> missing_edge(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::optional<Edge> found;
  a.for_each([&](Vertex x) {
    if (found) return;
    const VertexSet miss = b - g.neighbors(x);
    const Vertex y = miss.first();
    if (y >= 0 && y != x) found = Edge{x, y};
  });
  return found;
}

}  // namespace

bool is_induced_cycle(const Graph& g, const Hole& h) {
  const int l = h.length();
  if (l < 3) return false;
  VertexSet seen(g.order());
  for (Vertex v : h.cycle) {
    if (!g.has_vertex(v) || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == l - 1);
      if (g.adjacent(h.at(i), h.at(j)) != consecutive) return false;
    }
  return true;
}

std::vector<Hole> enumerate_induced_odd_cycles(const Graph& g, int min_len, std::optional<int> max_len) {
  const int n = g.order();
  const int hi = max_len.value_or(n);
  if (min_len < 3) throw PreconditionError("min_len must be at least 3");
  if (max_len && *max_len < min_len) throw PreconditionError("max_len must be at least min_len");
  std::vector<Hole> out;
  std::vector<Vertex> path;

  // path[0] is the anchor; `blocked` holds the neighbours of interior path
  // vertices, which no extension may touch.
  auto dfs = [&](auto&& self, const VertexSet& allowed, const VertexSet& blocked) -> void {
    const Vertex anchor = path.front();
    const Vertex last = path.back();
    const int len = static_cast<int>(path.size());
    VertexSet cand = g.neighbors(last) & allowed;
    cand -= blocked;
    cand.for_each([&](Vertex w) {
      if (std::find(path.begin(), path.end(), w) != path.end()) return;
      if (len >= 2 && g.adjacent(w, anchor)) {
        const int cycle_len = len + 1;
        if (w > path[1] && cycle_len % 2 == 1 && cycle_len >= min_len && cycle_len <= hi) {
          Hole h{path};
          h.cycle.push_back(w);
          out.push_back(std::move(h));
        }
        return;
      }
      if (len + 2 > hi) return;
      VertexSet next_blocked = blocked;
      if (len >= 2) next_blocked |= g.neighbors(last);
      path.push_back(w);
      self(self, allowed, next_blocked);
      path.pop_back();
    });
  };

  for (Vertex a = 0; a < n; ++a) {
    VertexSet allowed(n);
    for (Vertex v = a + 1; v < n; ++v) allowed.insert(v);
    path.assign(1, a);
    dfs(dfs, allowed, VertexSet(n));
  }
  std::sort(out.begin(), out.end(), [](const Hole& x, const Hole& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.cycle < y.cycle;
  });
  return out;
}

std::array<Hole, 10> five_hole_symmetries(const Hole& h) {
  if (h.length() != 5) throw PreconditionError("five_hole_symmetries needs a cycle of length 5");
  std::array<Hole, 10> out;
  for (int r = 0; r < 5; ++r) {
    Hole refl;
    Hole rot;
    for (int j = 0; j < 5; ++j) {
      refl.cycle.push_back(h.at(r - j));
      rot.cycle.push_back(h.at(j + r));
    }
    out[static_cast<std::size_t>(r)] = std::move(refl);
    out[static_cast<std::size_t>(r + 5)] = std::move(rot);
  }
  return out;
}

StarCheck satisfies_star(const Graph& g, const Hole& h) {
  require_five_hole(g, h);
  const VertexSet comp = component_of(g, h) - h.vertex_set(g.order());
  StarCheck result;
  comp.for_each([&](Vertex u) {
    if (!result.satisfied) return;
    const unsigned mask = hole_mask(g, h, u);
    bool ok = false;
    for (int i = 0; i < 5 && !ok; ++i)
      ok = mask == bits({i, i + 1}) || mask == bits({i, i + 2, i + 3});
    if (!ok) {
      result.satisfied = false;
      result.witness = u;
      result.positions = positions_of(mask);
      result.reason = "vertex " + std::to_string(u) + " has " + describe(mask);
    }
  });
  return result;
}

PartitionError::PartitionError(std::vector<std::string> violations)
    : std::runtime_error("invalid hole partition: " + join(violations)), violations_(std::move(violations)) {}

HolePartition hole_partition(const Graph& g, const Hole& h) {
  require_five_hole(g, h);
  const int n = g.order();
  HolePartition p;
  p.hole = h;
  p.component = component_of(g, h);
  for (int s = 0; s < 5; ++s) {
    p.parts[static_cast<std::size_t>(s)] = VertexSet(n);
    p.plus[static_cast<std::size_t>(s)] = VertexSet(n);
    p.minus[static_cast<std::size_t>(s)] = VertexSet(n);
  }
  std::vector<std::string> violations;
  const VertexSet rest = p.component - h.vertex_set(n);
  rest.for_each([&](Vertex u) {
    const unsigned mask = hole_mask(g, h, u);
    for (int i = 1; i <= 5; ++i) {
      // v_i sits at 0-based position i-1.
      const unsigned common = bits({i + 1, i + 2});
      const unsigned with_vi = common | bits({i - 1});
      if (mask == common || mask == with_vi) {
        const auto s = static_cast<std::size_t>(HolePartition::slot(i));
        p.parts[s].insert(u);
        (mask == with_vi ? p.plus[s] : p.minus[s]).insert(u);
        return;
      }
    }
    violations.push_back("vertex " + std::to_string(u) + " fits no U_i (" + describe(mask) + ")");
  });
  for (int i = 1; i <= 5; ++i) {
    if (!is_independent_set(g, p.U(i)))
      violations.push_back("U_" + std::to_string(i) + " = " + set_text(p.U(i)) + " is not independent");
    if (p.U_minus(i).size() >= 2)
      violations.push_back("U_" + std::to_string(i) + "^- = " + set_text(p.U_minus(i)) + " has more than one vertex");
  }
  if (!violations.empty()) throw PartitionError(std::move(violations));
  return p;
}

bool StructureReport::all_passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const StructureClause& c) { return c.passed; });
}

std::vector<StructureClause> StructureReport::failures() const {
  std::vector<StructureClause> out;
  for (const auto& c : clauses)
    if (!c.passed) out.push_back(c);
  return out;
}

StructureReport validate_structure(const Graph& g, const HolePartition& p) {
  StructureReport report;
  auto complete = [&](const std::string& clause, int i, const VertexSet& a, const VertexSet& b, const std::string& what) {
    StructureClause c{clause, i, true, {}, what};
    if (const auto e = missing_edge(g, a, b)) {
      c.passed = false;
      c.witness = {e->first, e->second};
      c.detail = what + ": " + std::to_string(e->first) + " and " + std::to_string(e->second) + " are nonadjacent";
    }
    report.clauses.push_back(std::move(c));
  };
  const auto name = [](const char* base, int i) { return std::string(base) + "_" + std::to_string(HolePartition::slot(i) + 1); };

  for (int i = 1; i <= 5; ++i) {
    if (p.U_plus(i).empty()) continue;
    const std::string ui = name("U", i);
    complete("i", i, p.U(i), p.U(i - 2), ui + " complete to " + name("U", i - 2));
    complete("i", i, p.U(i), p.U(i + 2), ui + " complete to " + name("U", i + 2));
    complete("ii", i, p.U(i), p.U_minus(i - 1), ui + " complete to " + name("U", i - 1) + "^-");
    complete("ii", i, p.U(i), p.U_minus(i + 1), ui + " complete to " + name("U", i + 1) + "^-");
    complete("iii", i, p.U_minus(i + 1), p.U_minus(i + 2), name("U", i + 1) + "^- complete to " + name("U", i + 2) + "^-");
    complete("iii", i, p.U_minus(i - 1), p.U_minus(i - 2), name("U", i - 1) + "^- complete to " + name("U", i - 2) + "^-");

    StructureClause iv{"iv", i, true, {}, "one of " + name("U", i + 2) + ", " + name("U", i - 2) + " empty"};
    if (!p.U(i + 2).empty() && !p.U(i - 2).empty()) {
      iv.passed = false;
      iv.witness = {p.U(i + 2).first(), p.U(i - 2).first()};
      iv.detail += ": both are nonempty";
    }
    report.clauses.push_back(std::move(iv));

    for (int d : {-1, 1}) {
      StructureClause v{"v", i, true, {}, ui + "^+ has at most one non-neighbour in " + name("U", i + d) + "^+"};
      p.U_plus(i).for_each([&](Vertex x) {
        if (!v.passed) return;
        const VertexSet miss = p.U_plus(i + d) - g.neighbors(x);
        if (miss.size() >= 2) {
          v.passed = false;
          v.witness = {x};
          for (Vertex y : miss.members()) v.witness.push_back(y);
          v.detail += ": " + std::to_string(x) + " misses " + set_text(miss);
        }
      });
      report.clauses.push_back(std::move(v));
    }
  }
  return report;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> out;
  // Bron-Kerbosch with pivoting on the complement: "neighbours" are non-neighbours.
  std::vector<VertexSet> anti(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    anti[static_cast<std::size_t>(v)] = VertexSet::full(n) - g.neighbors(v);
    anti[static_cast<std::size_t>(v)].erase(v);
  }
  auto bk = [&](auto&& self, VertexSet& r, VertexSet p, VertexSet x) -> void {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    Vertex pivot = -1;
    int best = -1;
    (p | x).for_each([&](Vertex u) {
      const int c = (p & anti[static_cast<std::size_t>(u)]).size();
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    const VertexSet branch = p - anti[static_cast<std::size_t>(pivot)];
    branch.for_each([&](Vertex v) {
      r.insert(v);
      self(self, r, p & anti[static_cast<std::size_t>(v)], x & anti[static_cast<std::size_t>(v)]);
      r.erase(v);
      p.erase(v);
      x.insert(v);
    });
  };
  VertexSet r(n);
  if (n > 0) bk(bk, r, VertexSet::full(n), VertexSet(n));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); });
  return out;
}

}  // namespace tperfect
