#include "tperfect/tminor.hpp"

#include <sstream>
#include <unordered_set>

#include "tperfect/canonical.hpp"

namespace tperfect {

namespace {

std::optional<Edge> edge_inside(const Graph& g, const VertexSet& s) {
  std::optional<Edge> found;
  s.for_each([&](Vertex u) {
    if (found) return;
    const Vertex w = (g.neighbors(u) & s).next(u);
    if (w >= 0) found = Edge{u, w};
  });
  return found;
}

std::vector<PatternName> targets_for(int order) {
  std::vector<PatternName> out;
  for (int rim = 3; rim + 1 <= order; rim += 2) out.push_back(PatternName::wheel(rim));
  if (order >= 7) out.push_back(PatternName::c7_squared());
  if (order >= 10) out.push_back(PatternName::c10_squared());
  return out;
}

class Searcher {
 public:
  Searcher(const TMinorOptions& options) : options_(options) {}

  std::optional<TMinorCertificate> search(const Graph& g) {
    if (g.order() < 4) return std::nullopt;
    const CanonicalCode code = canonical_code(g);
    if (failed_.contains(code)) return std::nullopt;
    if (options_.budget && explored_ >= *options_.budget) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++explored_;

    const auto targets = targets_for(g.order());
    if (auto m = find_any_induced(g, targets)) {
      TMinorCertificate cert;
      cert.target = m->name;
      VertexSet rest = g.vertices();
      for (Vertex v : m->embedding.image) rest.erase(v);
      if (!rest.empty()) cert.steps.push_back(DeleteStep{rest.members()});
      return cert;
    }

    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) < 2 || !is_independent_set(g, g.neighbors(v))) continue;
      if (auto cert = search(t_contract(g, v))) {
        cert->steps.insert(cert->steps.begin(), ContractStep{v});
        return cert;
      }
      if (exhausted_) return std::nullopt;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      if (auto cert = search(delete_vertices(g, VertexSet(g.order(), {v})).graph)) {
        cert->steps.insert(cert->steps.begin(), DeleteStep{{v}});
        return cert;
      }
      if (exhausted_) return std::nullopt;
    }
    failed_.insert(code);
    return std::nullopt;
  }

  bool exhausted() const { return exhausted_; }
  std::size_t explored() const { return explored_; }

 private:
  TMinorOptions options_;
  std::unordered_set<CanonicalCode> failed_;
  std::size_t explored_ = 0;
  bool exhausted_ = false;
};

}  // namespace

Graph t_contract(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
  const VertexSet& nv = g.neighbors(v);
  if (const auto e = edge_inside(g, nv))
    throw PreconditionError("cannot t-contract " + std::to_string(v) + ": neighbours " + std::to_string(e->first) +
                            " and " + std::to_string(e->second) + " are adjacent");
  VertexSet second(g.order());
  nv.for_each([&](Vertex u) { second |= g.neighbors(u); });
  second -= nv;
  second.erase(v);

  std::vector<Vertex> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    if (!nv.contains(u)) label[static_cast<std::size_t>(u)] = next++;
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    const Vertex la = label[static_cast<std::size_t>(a)];
    const Vertex lb = label[static_cast<std::size_t>(b)];
    if (la >= 0 && lb >= 0) edges.emplace_back(la, lb);
  }
  const Vertex merged = label[static_cast<std::size_t>(v)];
  second.for_each([&](Vertex u) { edges.emplace_back(merged, label[static_cast<std::size_t>(u)]); });
  return Graph::from_edges(next, edges);
}

Vertex t_contract_relabel(const Graph& g, Vertex center, Vertex v) {
  const VertexSet& nv = g.neighbors(center);
  if (nv.contains(v)) return -1;
  int below = 0;
  for (Vertex u = 0; u < v; ++u)
    if (!nv.contains(u)) ++below;
  return below;
}

std::string TMinorCertificate::script() const {
  std::ostringstream out;
  for (const auto& step : steps) {
    if (const auto* d = std::get_if<DeleteStep>(&step)) {
      out << "delete";
      for (Vertex v : d->vertices) out << ' ' << v;
    } else {
      out << "contract " << std::get<ContractStep>(step).center;
    }
    out << '\n';
  }
  out << "target " << target.to_string() << '\n';
  return out.str();
}

TMinorCertificate TMinorCertificate::parse_script(const std::string& text) {
  TMinorCertificate cert;
  std::istringstream in(text);
  std::string line;
  bool have_target = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word.front() == '#') continue;
    if (have_target) throw GraphError("line " + std::to_string(line_no) + ": step after target");
    if (word == "delete") {
      DeleteStep d;
      Vertex v = 0;
      while (ls >> v) d.vertices.push_back(v);
      if (!ls.eof() || d.vertices.empty()) throw GraphError("line " + std::to_string(line_no) + ": bad delete step");
      cert.steps.emplace_back(std::move(d));
    } else if (word == "contract") {
      Vertex v = 0;
      std::string extra;
      if (!(ls >> v) || (ls >> extra)) throw GraphError("line " + std::to_string(line_no) + ": bad contract step");
      cert.steps.emplace_back(ContractStep{v});
    } else if (word == "target") {
      std::string name;
      if (!(ls >> name)) throw GraphError("line " + std::to_string(line_no) + ": missing target name");
      cert.target = PatternName::parse(name);
      have_target = true;
    } else {
      throw GraphError("line " + std::to_string(line_no) + ": unknown step '" + word + "'");
    }
  }
  if (!have_target) throw GraphError("certificate has no target line");
  return cert;
}

Graph replay(const Graph& g, const TMinorCertificate& certificate) {
  Graph cur = g;
  for (const auto& step : certificate.steps) {
    if (const auto* d = std::get_if<DeleteStep>(&step)) {
      for (Vertex v : d->vertices)
        if (!cur.has_vertex(v)) throw PreconditionError("delete step names missing vertex " + std::to_string(v));
      cur = delete_vertices(cur, VertexSet(cur.order(), d->vertices)).graph;
    } else {
      cur = t_contract(cur, std::get<ContractStep>(step).center);
    }
  }
  return cur;
}

bool verify_certificate(const Graph& g, const TMinorCertificate& certificate) {
  try {
    return are_isomorphic(replay(g, certificate), named_graph(certificate.target));
  } catch (const std::exception&) {
    return false;
  }
}

TMinorOptions TMinorOptions::defaults_for(const Graph& g) {
  TMinorOptions o;
  if (g.order() > 10) o.budget = 1'000'000;
  return o;
}

TMinorResult has_forbidden_t_minor(const Graph& g, const TMinorOptions& options) {
  Searcher s(options);
  TMinorResult r;
  r.certificate = s.search(g);
  r.states_explored = s.explored();
  if (r.certificate)
    r.outcome = TMinorOutcome::Found;
  else
    r.outcome = s.exhausted() ? TMinorOutcome::Inconclusive : TMinorOutcome::Absent;
  return r;
}

TMinorResult has_forbidden_t_minor(const Graph& g) { return has_forbidden_t_minor(g, TMinorOptions::defaults_for(g)); }

const char* to_string(TMinorOutcome outcome) {
  switch (outcome) {
    case TMinorOutcome::Found: return "found";
    case TMinorOutcome::Absent: return "absent";
    case TMinorOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace tperfect
