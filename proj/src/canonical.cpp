#include "tperfect/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace tperfect {

std::size_t CanonicalCode::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(order_);
  for (std::uint64_t w : bits_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string CanonicalCode::to_string() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(order_) + ":";
  for (std::uint64_t w : bits_)
    for (int shift = 60; shift >= 0; shift -= 4) out.push_back(kHex[(w >> shift) & 0xF]);
  return out;
}

namespace {

using Cells = std::vector<std::vector<Vertex>>;
using Bits = std::vector<std::uint64_t>;

// Splits cells by neighbour counts into every cell until the partition is
// equitable. Split order depends only on the counts, so the result commutes
// with relabelling.
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    Cells next;
    next.reserve(cells.size());
    bool split = false;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) {
        std::vector<int> sig(cells.size(), 0);
        g.neighbors(v).for_each([&](Vertex u) { ++sig[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(u)])]; });
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= keyed.size(); ++i) {
        if (i == keyed.size() || keyed[i].first != keyed[start].first) {
          std::vector<Vertex> part;
          for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
          std::sort(part.begin(), part.end());
          next.push_back(std::move(part));
          start = i;
        }
      }
      if (keyed.front().first != keyed.back().first) split = true;
    }
    cells = std::move(next);
    if (!split) return;
  }
}

Bits code_of(const Graph& g, const std::vector<Vertex>& lab) {
  const int n = g.order();
  const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  Bits bits((total + 63) / 64, 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (g.adjacent(lab[static_cast<std::size_t>(i)], lab[static_cast<std::size_t>(j)]))
        bits[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
  return bits;
}

class LabelSearch {
 public:
  explicit LabelSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Cells cells;
    if (n_ > 0) {
      std::vector<Vertex> all(static_cast<std::size_t>(n_));
      std::iota(all.begin(), all.end(), 0);
      cells.push_back(std::move(all));
    }
    visit(std::move(cells));
  }

  Bits best_bits;
  std::vector<Vertex> best_lab;

 private:
  void visit(Cells cells) {
    refine(g_, cells);
    const auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> candidates = cells[t];
    std::vector<Vertex> explored;
    for (Vertex c : candidates) {
      if (!explored.empty() && in_explored_orbit(c, explored)) continue;
      explored.push_back(c);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != t) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({c});
        std::vector<Vertex> rest;
        for (Vertex v : cells[i])
          if (v != c) rest.push_back(v);
        child.push_back(std::move(rest));
      }
      prefix_.push_back(c);
      visit(std::move(child));
      prefix_.pop_back();
    }
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> lab;
    lab.reserve(static_cast<std::size_t>(n_));
    for (const auto& c : cells) lab.push_back(c.front());
    Bits bits = code_of(g_, lab);
    if (best_lab.empty() && n_ > 0 && first_lab_.empty()) {
      first_lab_ = lab;
      first_bits_ = bits;
      best_lab = lab;
      best_bits = std::move(bits);
      return;
    }
    if (bits == first_bits_) record_automorphism(lab, first_lab_);
    if (bits == best_bits) {
      record_automorphism(lab, best_lab);
    } else if (bits > best_bits) {
      best_bits = std::move(bits);
      best_lab = std::move(lab);
    }
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (std::size_t p = 0; p < from.size(); ++p) {
      gamma[static_cast<std::size_t>(from[p])] = to[p];
      identity = identity && from[p] == to[p];
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  // Orbit test under the automorphisms found so far that fix the current
  // prefix pointwise; any such automorphism maps one subtree onto the other.
  bool in_explored_orbit(Vertex c, const std::vector<Vertex>& explored) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes_prefix = std::all_of(prefix_.begin(), prefix_.end(),
                                            [&](Vertex p) { return gamma[static_cast<std::size_t>(p)] == p; });
      if (!fixes_prefix) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex a = find(v);
        const Vertex b = find(gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    const Vertex root = find(c);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return find(e) == root; });
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> prefix_;
  std::vector<Vertex> first_lab_;
  Bits first_bits_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  LabelSearch search(g);
  search.run();
  CanonicalForm out;
  out.labeling = search.best_lab;
  out.code = CanonicalCode(g.order(), search.best_bits);
  std::vector<Vertex> position(static_cast<std::size_t>(g.order()));
  for (std::size_t p = 0; p < out.labeling.size(); ++p) position[static_cast<std::size_t>(out.labeling[p])] = static_cast<Vertex>(p);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
  out.graph = Graph::from_edges(g.order(), edges);
  return out;
}

CanonicalCode canonical_code(const Graph& g) {
  LabelSearch search(g);
  search.run();
  return CanonicalCode(g.order(), std::move(search.best_bits));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

std::vector<Graph> enumerate_graphs(int order) {
  if (order < 0) throw GraphError("negative order");
  std::vector<Graph> reps{Graph::from_edges(0, {})};
  for (int n = 1; n <= order; ++n) {
    std::unordered_set<CanonicalCode> seen;
    std::vector<std::pair<CanonicalCode, Graph>> next;
    for (const Graph& base : reps) {
      const std::vector<Edge> base_edges = base.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::vector<Edge> edges = base_edges;
        for (int u = 0; u < n - 1; ++u)
          if ((mask >> u) & 1U) edges.emplace_back(u, n - 1);
        const Graph g = Graph::from_edges(n, edges);
        CanonicalForm form = canonical_form(g);
        if (seen.insert(form.code).second) next.emplace_back(std::move(form.code), std::move(form.graph));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    reps.clear();
    for (auto& [code, g] : next) reps.push_back(std::move(g));
  }
  return reps;
}

}  // namespace tperfect
