#include "tperfect/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "double_description.hpp"
#include "tperfect/holes.hpp"

namespace tperfect {

namespace {

Constraint bound_row(int n, Vertex v, bool upper) {
  Constraint c;
  c.kind = upper ? ConstraintKind::UpperBound : ConstraintKind::LowerBound;
  c.coefficients.assign(static_cast<std::size_t>(n), 0);
  c.coefficients[static_cast<std::size_t>(v)] = upper ? 1 : -1;
  c.rhs = upper ? 1 : 0;
  c.support = {v};
  return c;
}

template <class Int>
std::vector<RationalVector> to_points(const std::vector<detail::Ray<Int>>& rays) {
  std::vector<RationalVector> out;
  out.reserve(rays.size());
  for (const auto& r : rays) {
    RationalVector x;
    const detail::BigInt den(r.x[0]);
    for (std::size_t j = 1; j < r.x.size(); ++j) x.emplace_back(detail::BigInt(r.x[j]), den);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<VertexSet> independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet cur(g.order());
  auto rec = [&](auto&& self, VertexSet allowed) -> void {
    out.push_back(cur);
    for (Vertex v : allowed.members()) {
      allowed.erase(v);
      cur.insert(v);
      self(self, allowed - g.neighbors(v));
      cur.erase(v);
    }
  };
  rec(rec, g.vertices());
  return out;
}

// Branch and bound for the maximum weight independent set inside `cand`.
class MaxWeightSearch {
 public:
  MaxWeightSearch(const Graph& g, std::span<const std::int64_t> w) : g_(g), w_(w) {}

  std::int64_t run(VertexSet& best_set) {
    VertexSet cand(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v)
      if (w_[static_cast<std::size_t>(v)] > 0) cand.insert(v);
    VertexSet cur(g_.order());
    best_set = cur;
    best_ = 0;
    best_set_ = &best_set;
    search(cand, cur, 0);
    return best_;
  }

 private:
  void search(VertexSet cand, VertexSet& cur, std::int64_t value) {
    if (cand.empty()) {
      if (value > best_) {
        best_ = value;
        *best_set_ = cur;
      }
      return;
    }
    std::int64_t bound = value;
    Vertex pick = -1;
    cand.for_each([&](Vertex v) {
      bound += w_[static_cast<std::size_t>(v)];
      if (pick < 0 || g_.degree(v) > g_.degree(pick)) pick = v;
    });
    if (bound <= best_) return;
    // Include pick, then exclude it.
    cur.insert(pick);
    search(cand - g_.neighbors(pick) - VertexSet(g_.order(), {pick}), cur, value + w_[static_cast<std::size_t>(pick)]);
    cur.erase(pick);
    cand.erase(pick);
    search(cand, cur, value);
  }

  const Graph& g_;
  std::span<const std::int64_t> w_;
  std::int64_t best_ = 0;
  VertexSet* best_set_ = nullptr;
};

std::int64_t alpha_of(const Graph& g, std::span<const std::int64_t> w) {
  VertexSet s;
  return MaxWeightSearch(g, w).run(s);
}

// Vertices, edges and odd cycles of g as cover elements, in tie-break order.
std::vector<CoverElement> cover_elements(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw PreconditionError("w-cover search is limited to 20 vertices");
  std::vector<CoverElement> out;
  for (Vertex v = 0; v < n; ++v) out.push_back({CoverElement::Kind::Vertex, {v}, {}});
  for (const auto& [u, v] : g.edges()) out.push_back({CoverElement::Kind::Edge, {u, v}, {}});

  // ends[mask]: endpoints v of paths that start at min(mask), visit exactly
  // mask, and end at v.
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint32_t> ends(total, 0);
  for (Vertex s = 0; s < n; ++s) ends[std::size_t{1} << s] = 1U << s;
  std::vector<CoverElement> cycles;
  for (std::size_t mask = 1; mask < total; ++mask) {
    const std::uint32_t e = ends[mask];
    if (e == 0) continue;
    const int s = std::countr_zero(mask);
    for (std::uint32_t bits = e; bits != 0; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      g.neighbors(v).for_each([&](Vertex w) {
        if (w > s && !((mask >> w) & 1U)) ends[mask | (std::size_t{1} << w)] |= 1U << w;
      });
    }
    const int size = std::popcount(mask);
    if (size < 3 || size % 2 == 0) continue;
    std::uint32_t closing = 0;
    for (std::uint32_t bits = e; bits != 0; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      if (g.adjacent(v, s)) closing |= 1U << v;
    }
    if (closing == 0) continue;
    // Walk back from the largest closing endpoint to recover a cycle.
    CoverElement c{CoverElement::Kind::OddCycle, {}, {}};
    std::size_t m = mask;
    int v = 31 - std::countl_zero(closing);
    std::vector<Vertex> rev;
    while (true) {
      rev.push_back(v);
      if (v == s) break;
      const std::size_t prev = m & ~(std::size_t{1} << v);
      int u = -1;
      for (std::uint32_t bits = ends[prev]; bits != 0; bits &= bits - 1) {
        const int cand = std::countr_zero(bits);
        if (g.adjacent(cand, v)) u = cand;
      }
      m = prev;
      v = u;
    }
    c.cycle.assign(rev.rbegin(), rev.rend());
    for (Vertex x = 0; x < n; ++x)
      if ((mask >> x) & 1U) c.vertices.push_back(x);
    cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(), [](const CoverElement& a, const CoverElement& b) { return a.vertices < b.vertices; });
  out.insert(out.end(), std::make_move_iterator(cycles.begin()), std::make_move_iterator(cycles.end()));
  return out;
}

// Exact minimum cover cost over demand vectors d <= (radix-1)^n, memoized.
class CoverSolver {
 public:
  CoverSolver(const Graph& g, std::int64_t max_weight)
      : g_(g), elements_(cover_elements(g)), radix_(static_cast<std::uint64_t>(max_weight) + 1) {
    containing_.resize(static_cast<std::size_t>(g.order()));
    for (std::size_t e = 0; e < elements_.size(); ++e)
      for (Vertex v : elements_[e].vertices) containing_[static_cast<std::size_t>(v)].push_back(e);
    std::uint64_t p = 1;
    for (int v = 0; v < g.order(); ++v) {
      power_.push_back(p);
      if (__builtin_mul_overflow(p, radix_, &p)) throw PreconditionError("weight grid too large for the w-cover search");
    }
  }

  std::int64_t cost(std::vector<std::int64_t> d) { return solve(d).cost; }

  WCover cover(const Weighting& w) {
    std::vector<std::int64_t> d = w.values;
    WCover out;
    out.cost = solve(d).cost;
    std::map<std::size_t, std::int64_t> mult;
    while (true) {
      const Entry& e = solve(d);
      if (e.cost == 0) break;
      ++mult[e.choice];
      for (Vertex v : elements_[e.choice].vertices) {
        auto& dv = d[static_cast<std::size_t>(v)];
        if (dv > 0) --dv;
      }
    }
    for (const auto& [idx, k] : mult) out.elements.emplace_back(elements_[idx], k);
    return out;
  }

 private:
  struct Entry {
    std::int64_t cost = 0;
    std::size_t choice = 0;
  };

  std::uint64_t key(const std::vector<std::int64_t>& d) const {
    std::uint64_t k = 0;
    for (std::size_t v = 0; v < d.size(); ++v) k += static_cast<std::uint64_t>(d[v]) * power_[v];
    return k;
  }

  const Entry& solve(std::vector<std::int64_t>& d) {
    const std::uint64_t k = key(d);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Entry best{std::numeric_limits<std::int64_t>::max(), 0};
    std::size_t first = d.size();
    for (std::size_t v = 0; v < d.size(); ++v)
      if (d[v] > 0) {
        first = v;
        break;
      }
    if (first == d.size()) return memo_.emplace(k, Entry{0, 0}).first->second;
    // Weak duality: no cover is cheaper than alpha_d, so reaching it ends the scan.
    const std::int64_t lower = alpha_of(g_, d);
    std::vector<Vertex> touched;
    for (std::size_t e : containing_[first]) {
      const auto& el = elements_[e];
      touched.clear();
      for (Vertex v : el.vertices)
        if (d[static_cast<std::size_t>(v)] > 0) {
          --d[static_cast<std::size_t>(v)];
          touched.push_back(v);
        }
      const std::int64_t c = el.cost() + solve(d).cost;
      for (Vertex v : touched) ++d[static_cast<std::size_t>(v)];
      if (c < best.cost) best = {c, e};
      if (best.cost == lower) break;
    }
    return memo_.emplace(k, best).first->second;
  }

  const Graph& g_;
  std::vector<CoverElement> elements_;
  std::vector<std::vector<std::size_t>> containing_;
  std::uint64_t radix_;
  std::vector<std::uint64_t> power_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

void check_weighting(const Graph& g, const Weighting& w) {
  if (w.size() != g.order())
    throw GraphError("weighting has " + std::to_string(w.size()) + " entries for a graph of order " +
                     std::to_string(g.order()));
}

}  // namespace

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_vector(const RationalVector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_rational(x[i]);
  }
  return out + ")";
}

const char* to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::LowerBound: return "lower-bound";
    case ConstraintKind::UpperBound: return "upper-bound";
    case ConstraintKind::Edge: return "edge";
    case ConstraintKind::OddCycle: return "odd-cycle";
  }
  return "?";
}

std::size_t ConstraintSystem::count(ConstraintKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(constraints.begin(), constraints.end(), [&](const Constraint& c) { return c.kind == kind; }));
}

namespace {
Rational row_value(const Constraint& c, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t v = 0; v < c.coefficients.size(); ++v)
    if (c.coefficients[v] != 0) s += c.coefficients[v] * x[v];
  return s;
}
}  // namespace

bool ConstraintSystem::satisfied_by(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != variables) return false;
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const Constraint& c) { return row_value(c, x) <= c.rhs; });
}

std::vector<std::size_t> ConstraintSystem::tight_rows(const RationalVector& x) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < constraints.size(); ++k)
    if (row_value(constraints[k], x) == constraints[k].rhs) out.push_back(k);
  return out;
}

ConstraintSystem build_system(const Graph& g) {
  const int n = g.order();
  ConstraintSystem s;
  s.variables = n;
  for (Vertex v = 0; v < n; ++v) s.constraints.push_back(bound_row(n, v, false));
  for (Vertex v = 0; v < n; ++v) s.constraints.push_back(bound_row(n, v, true));
  for (const auto& [u, v] : g.edges()) {
    Constraint c;
    c.kind = ConstraintKind::Edge;
    c.coefficients.assign(static_cast<std::size_t>(n), 0);
    c.coefficients[static_cast<std::size_t>(u)] = 1;
    c.coefficients[static_cast<std::size_t>(v)] = 1;
    c.rhs = 1;
    c.support = {u, v};
    s.constraints.push_back(std::move(c));
  }
  for (const auto& h : enumerate_induced_odd_cycles(g, 3)) add_odd_cycle_row(s, h.cycle);
  return s;
}

void add_odd_cycle_row(ConstraintSystem& system, std::span<const Vertex> cycle) {
  if (cycle.size() < 3 || cycle.size() % 2 == 0) throw GraphError("odd-cycle row needs an odd cycle of length >= 3");
  Constraint c;
  c.kind = ConstraintKind::OddCycle;
  c.coefficients.assign(static_cast<std::size_t>(system.variables), 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= system.variables) throw GraphError("odd-cycle row names vertex " + std::to_string(v) + " out of range");
    if (c.coefficients[static_cast<std::size_t>(v)] != 0) throw GraphError("odd-cycle row repeats vertex " + std::to_string(v));
    c.coefficients[static_cast<std::size_t>(v)] = 1;
  }
  c.rhs = static_cast<int>(cycle.size() - 1) / 2;
  c.support.assign(cycle.begin(), cycle.end());
  system.constraints.push_back(std::move(c));
}

std::vector<RationalVector> enumerate_vertices(const ConstraintSystem& system) {
  std::vector<RationalVector> out;
  try {
    out = to_points(detail::double_description<std::int64_t>(system));
  } catch (const detail::ArithmeticOverflow&) {
    out = to_points(detail::double_description<detail::BigInt>(system));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool t_perfect_oracle(const Graph& g) {
  const auto vertices = enumerate_vertices(build_system(g));
  for (const auto& x : vertices)
    for (const auto& xi : x)
      if (xi != 0 && xi != 1) return false;
  std::set<std::vector<int>> expected;
  for (const auto& s : independent_sets(g)) {
    std::vector<int> chi(static_cast<std::size_t>(g.order()), 0);
    s.for_each([&](Vertex v) { chi[static_cast<std::size_t>(v)] = 1; });
    expected.insert(std::move(chi));
  }
  std::set<std::vector<int>> found;
  for (const auto& x : vertices) {
    std::vector<int> chi;
    for (const auto& xi : x) chi.push_back(xi == 1 ? 1 : 0);
    found.insert(std::move(chi));
  }
  if (found != expected)
    throw std::logic_error("integral polytope vertices differ from the independent sets");
  return true;
}

int row_rank(const ConstraintSystem& system, std::span<const std::size_t> rows) {
  std::vector<RationalVector> m;
  for (std::size_t k : rows) {
    RationalVector r;
    for (int c : system.constraints.at(k).coefficients) r.emplace_back(c);
    m.push_back(std::move(r));
  }
  int rank = 0;
  const std::size_t cols = static_cast<std::size_t>(system.variables);
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < m.size(); ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / p[col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * p[c];
    }
    ++rank;
  }
  return rank;
}

Weighting::Weighting(std::vector<std::int64_t> v) : values(std::move(v)) {
  for (auto x : values)
    if (x < 0) throw GraphError("weights must be nonnegative");
}

Weighting Weighting::uniform(int order, std::int64_t value) {
  return Weighting(std::vector<std::int64_t>(static_cast<std::size_t>(order), value));
}

std::string Weighting::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + ")";
}

std::int64_t alpha_w(const Graph& g, const Weighting& w) {
  check_weighting(g, w);
  return alpha_of(g, w.values);
}

VertexSet max_weight_independent_set(const Graph& g, const Weighting& w) {
  check_weighting(g, w);
  VertexSet s;
  MaxWeightSearch(g, w.values).run(s);
  return s;
}

std::int64_t CoverElement::cost() const {
  return kind == Kind::OddCycle ? static_cast<std::int64_t>(vertices.size() - 1) / 2 : 1;
}

std::string CoverElement::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Vertex: out << "vertex " << vertices.at(0); break;
    case Kind::Edge: out << "edge " << vertices.at(0) << ' ' << vertices.at(1); break;
    case Kind::OddCycle:
      out << "cycle";
      for (Vertex v : cycle) out << ' ' << v;
      break;
  }
  return out.str();
}

bool WCover::is_valid_for(const Graph& g, const Weighting& w) const {
  if (w.size() != g.order()) return false;
  std::vector<std::int64_t> covered(static_cast<std::size_t>(g.order()), 0);
  std::int64_t total = 0;
  for (const auto& [e, k] : elements) {
    if (k <= 0) return false;
    for (Vertex v : e.vertices)
      if (!g.has_vertex(v)) return false;
    switch (e.kind) {
      case CoverElement::Kind::Vertex:
        if (e.vertices.size() != 1) return false;
        break;
      case CoverElement::Kind::Edge:
        if (e.vertices.size() != 2 || !g.adjacent(e.vertices[0], e.vertices[1])) return false;
        break;
      case CoverElement::Kind::OddCycle: {
        const std::size_t l = e.cycle.size();
        if (l < 3 || l % 2 == 0) return false;
        std::vector<Vertex> sorted = e.cycle;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted != e.vertices) return false;
        for (std::size_t i = 0; i < l; ++i)
          if (!g.has_vertex(e.cycle[i]) || !g.adjacent(e.cycle[i], e.cycle[(i + 1) % l])) return false;
        break;
      }
    }
    for (Vertex v : e.vertices) covered[static_cast<std::size_t>(v)] += k;
    total += k * e.cost();
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (covered[static_cast<std::size_t>(v)] < w[v]) return false;
  return total == cost;
}

WCover min_w_cover(const Graph& g, const Weighting& w) {
  check_weighting(g, w);
  const std::int64_t top = w.values.empty() ? 0 : *std::max_element(w.values.begin(), w.values.end());
  CoverSolver solver(g, top);
  return solver.cover(w);
}

std::string StrongCheckReport::summary() const {
  if (passed) return "pass up to w_max = " + std::to_string(w_max);
  return "violation at w = " + violation->to_string() + ": alpha_w = " + std::to_string(alpha) +
         ", minimum cover cost = " + std::to_string(cover_cost);
}

StrongCheckReport strong_t_perfect_check(const Graph& g, int w_max) {
  if (w_max < 0) throw GraphError("w_max must be nonnegative");
  StrongCheckReport report;
  report.w_max = w_max;
  CoverSolver solver(g, w_max);
  const int n = g.order();
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
  while (true) {
    ++report.weightings_checked;
    const std::int64_t a = alpha_of(g, w);
    const std::int64_t c = solver.cost(w);
    if (a != c) {
      report.passed = false;
      report.violation = Weighting(w);
      report.alpha = a;
      report.cover_cost = c;
      return report;
    }
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == w_max) w[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return report;
}

}  // namespace tperfect
