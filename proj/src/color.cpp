#include "tperfect/color.hpp"

#include <algorithm>

#include "tperfect/patterns.hpp"
#include "tperfect/recognize.hpp"

namespace tperfect {

namespace {

VertexSet max_clique(const Graph& g) {
  VertexSet best(g.order());
  VertexSet cur(g.order());
  auto rec = [&](auto&& self, VertexSet cand) -> void {
    if (cur.size() > best.size()) best = cur;
    if (cur.size() + cand.size() <= best.size()) return;
    for (Vertex v : cand.members()) {
      cand.erase(v);
      cur.insert(v);
      self(self, cand & g.neighbors(v));
      cur.erase(v);
      if (cur.size() + cand.size() <= best.size()) return;
    }
  };
  rec(rec, g.vertices());
  return best;
}

// Backtracking k-colouring; the clique gets fixed distinct colours.
std::optional<std::vector<int>> k_color(const Graph& g, int k) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  if (n == 0) return color;
  if (k <= 0) return std::nullopt;
  k = std::min(k, n);
  const VertexSet clique = max_clique(g);
  if (clique.size() > k) return std::nullopt;
  int c = 0;
  clique.for_each([&](Vertex v) { color[static_cast<std::size_t>(v)] = c++; });

  auto rec = [&](auto&& self, int colored) -> bool {
    if (colored == n) return true;
    // Most constrained uncoloured vertex.
    Vertex pick = -1;
    int pick_sat = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      std::vector<char> used(static_cast<std::size_t>(k), 0);
      int sat = 0;
      g.neighbors(v).for_each([&](Vertex u) {
        const int cu = color[static_cast<std::size_t>(u)];
        if (cu >= 0 && !used[static_cast<std::size_t>(cu)]) {
          used[static_cast<std::size_t>(cu)] = 1;
          ++sat;
        }
      });
      if (sat > pick_sat) {
        pick = v;
        pick_sat = sat;
      }
    }
    for (int col = 0; col < k; ++col) {
      bool ok = true;
      g.neighbors(pick).for_each([&](Vertex u) { ok = ok && color[static_cast<std::size_t>(u)] != col; });
      if (!ok) continue;
      color[static_cast<std::size_t>(pick)] = col;
      if (self(self, colored + 1)) return true;
    }
    color[static_cast<std::size_t>(pick)] = -1;
    return false;
  };
  if (!rec(rec, clique.size())) return std::nullopt;
  return color;
}

std::vector<int> minimal_coloring(const Graph& g) {
  for (int k = 0;; ++k)
    if (auto c = k_color(g, k)) return *c;
}

struct Structural {
  ColoringBranch branch;
  Hole hole;
  std::vector<int> colors;  // local labels
};

// Three-colour partition of the structural case analysis, for a numbering
// with U_1^+ nonempty and U_4 empty.
std::optional<Structural> case_partition(const Graph& c, const Hole& h) {
  const HolePartition p = hole_partition(c, h);
  if (p.U_plus(1).empty() || !p.U(4).empty()) return std::nullopt;
  std::vector<int> colors(static_cast<std::size_t>(c.order()), -1);
  auto paint = [&](int col, const VertexSet& part, std::initializer_list<int> hole_indices) {
    part.for_each([&](Vertex v) { colors[static_cast<std::size_t>(v)] = col; });
    for (int i : hole_indices) colors[static_cast<std::size_t>(h.v(i))] = col;
  };
  ColoringBranch branch;
  if (p.U(3).empty()) {
    branch = ColoringBranch::U3Empty;
    paint(0, p.U(5), {4});
    paint(1, p.U(1), {2, 5});
    paint(2, p.U(2), {1, 3});
  } else if (p.U(5).empty()) {
    branch = ColoringBranch::U5Empty;
    paint(0, p.U(1), {5});
    paint(1, p.U(2), {1, 3});
    paint(2, p.U(3), {2, 4});
  } else if (!p.U_plus(5).empty()) {
    if (!p.U(2).empty()) throw std::logic_error("colouring case analysis: U_5^+ and U_2 both nonempty");
    branch = ColoringBranch::U5PlusNonempty;
    paint(0, p.U(1), {2, 5});
    paint(1, p.U(3), {3});
    paint(2, p.U(5), {1, 4});
  } else {
    throw std::logic_error("colouring case analysis exhausted: U_3 and U_5 nonempty with U_5^+ empty");
  }
  return Structural{branch, h, std::move(colors)};
}

Structural structural_coloring(const Graph& c) {
  for (const auto& h : enumerate_induced_odd_cycles(c, 5, 5))
    for (const auto& s : five_hole_symmetries(h))
      if (auto r = case_partition(c, s)) return *r;
  throw std::logic_error("no five-hole numbering with U_1^+ nonempty and U_4 empty");
}

}  // namespace

const char* to_string(ColoringBranch b) {
  switch (b) {
    case ColoringBranch::Perfect: return "perfect";
    case ColoringBranch::ClawFree: return "claw-free";
    case ColoringBranch::U3Empty: return "structural-U3-empty";
    case ColoringBranch::U5Empty: return "structural-U5-empty";
    case ColoringBranch::U5PlusNonempty: return "structural-U5plus-nonempty";
  }
  return "?";
}

int Coloring::color_count() const {
  int m = -1;
  for (int c : colors) m = std::max(m, c);
  return m + 1;
}

std::vector<VertexSet> Coloring::classes() const {
  const int n = static_cast<int>(colors.size());
  std::vector<VertexSet> out(static_cast<std::size_t>(color_count()), VertexSet(n));
  for (Vertex v = 0; v < n; ++v) out[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])].insert(v);
  return out;
}

bool Coloring::is_proper(const Graph& g) const {
  if (static_cast<int>(colors.size()) != g.order()) return false;
  for (int c : colors)
    if (c < 0) return false;
  for (const auto& [u, v] : g.edges())
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
  return true;
}

ColoringBranch Coloring::branch() const {
  for (const auto& c : components)
    if (c.hole) return c.branch;
  return components.empty() ? ColoringBranch::Perfect : components.front().branch;
}

std::optional<Coloring> exact_k_color(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("exact_k_color needs k >= 1");
  auto colors = k_color(g, k);
  if (!colors) return std::nullopt;
  Coloring out;
  out.colors = std::move(*colors);
  return out;
}

Coloring three_color(const Graph& g) {
  const Verdict verdict = recognize(g);
  if (verdict.answer != Answer::TPerfect)
    throw PreconditionError(std::string("three_color needs a t-perfect graph; recognition answered ") +
                            to_string(verdict.answer));
  Coloring out;
  out.colors.assign(static_cast<std::size_t>(g.order()), -1);
  for (const auto& trace : verdict.components) {
    const auto sub = induced_subgraph(g, VertexSet(g.order(), trace.vertices));
    ComponentColoring cc;
    cc.vertices = trace.vertices;
    std::vector<int> local;
    if (trace.branch == Branch::Structural) {
      Structural s = structural_coloring(sub.graph);
      cc.branch = s.branch;
      cc.hole = Hole{sub.host_of(s.hole.cycle)};
      local = std::move(s.colors);
    } else {
      cc.branch = trace.branch == Branch::ClawFree ? ColoringBranch::ClawFree : ColoringBranch::Perfect;
      local = minimal_coloring(sub.graph);
    }
    for (std::size_t i = 0; i < local.size(); ++i) out.colors[static_cast<std::size_t>(sub.to_host[i])] = local[i];
    out.components.push_back(std::move(cc));
  }
  if (!out.is_proper(g) || out.color_count() > 3) throw std::logic_error("three_color produced an invalid colouring");
  return out;
}

}  // namespace tperfect
