#include "tperfect/recognize.hpp"

#include <algorithm>

namespace tperfect {

namespace {

constexpr const char* kHoleFallback = "odd-hole detection: exhaustive induced-cycle enumeration";
constexpr const char* kClawFreeFallback = "claw-free t-perfection: exhaustive t-minor search";

Hole to_host(const InducedSubgraph& sub, const Hole& h) { return Hole{sub.host_of(h.cycle)}; }

struct StepResult {
  Answer answer = Answer::TPerfect;
  Certificate certificate;
};

// Five-hole checks first, then holes of length 7..19.
StepResult decide_bounded(const InducedSubgraph& sub, ComponentTrace* trace) {
  for (const auto& h : enumerate_induced_odd_cycles(sub.graph, 5, 5)) {
    if (trace) trace->five_holes.push_back(to_host(sub, h));
    auto check = satisfies_star(sub.graph, h);
    if (!check.satisfied) {
      check.witness = sub.host_of(*check.witness);
      return {Answer::NotTPerfect, StarViolation{to_host(sub, h), check}};
    }
  }
  if (sub.graph.order() >= 7) {
    const auto longer = enumerate_induced_odd_cycles(sub.graph, 7, std::min(19, sub.graph.order()));
    if (!longer.empty()) return {Answer::NotTPerfect, OddHoleCertificate{to_host(sub, longer.front())}};
  }
  return {};
}

// Any odd hole other than a five-hole rejects, then the five-hole checks.
StepResult decide_unbounded(const InducedSubgraph& sub, const std::vector<Hole>& holes, ComponentTrace& trace) {
  for (const auto& h : holes)
    if (h.length() != 5) return {Answer::NotTPerfect, OddHoleCertificate{to_host(sub, h)}};
  for (const auto& h : holes) {
    trace.five_holes.push_back(to_host(sub, h));
    auto check = satisfies_star(sub.graph, h);
    if (!check.satisfied) {
      check.witness = sub.host_of(*check.witness);
      return {Answer::NotTPerfect, StarViolation{to_host(sub, h), check}};
    }
  }
  return {};
}

StepResult decide_component(const Graph& g, const InducedSubgraph& sub, const RecognizeOptions& options,
                            ComponentTrace& trace) {
  const Graph& c = sub.graph;
  if (auto m = find_small_obstruction(c)) {
    trace.branch = Branch::Obstruction;
    m->embedding.image = sub.host_of(m->embedding.image);
    return {Answer::NotTPerfect, PatternCertificate{*m}};
  }
  trace.has_claw = contains_claw(c);
  if (!trace.has_claw) {
    trace.branch = Branch::ClawFree;
    trace.fallback_steps.push_back(kClawFreeFallback);
    const auto result = has_forbidden_t_minor(c, options.tminor.value_or(TMinorOptions::defaults_for(c)));
    trace.tminor_states = result.states_explored;
    if (result.outcome == TMinorOutcome::Inconclusive) return {Answer::Inconclusive, AcceptanceTrace{}};
    if (result.outcome == TMinorOutcome::Absent) return {};
    // Make the certificate replay on the whole graph: drop the other components first.
    TMinorCertificate cert = *result.certificate;
    VertexSet others = g.vertices();
    for (Vertex v : sub.to_host) others.erase(v);
    if (!others.empty()) cert.steps.insert(cert.steps.begin(), DeleteStep{others.members()});
    return {Answer::NotTPerfect, TMinorWitness{std::move(cert)}};
  }

  trace.fallback_steps.push_back(kHoleFallback);
  if (options.hole_search == HoleSearchMode::Bounded) {
    if (enumerate_induced_odd_cycles(c, 5).empty()) {
      trace.branch = Branch::Perfect;
      return {};
    }
    trace.branch = Branch::Structural;
    return decide_bounded(sub, &trace);
  }

  const auto holes = enumerate_induced_odd_cycles(c, 5);
  trace.odd_holes = holes.size();
  if (holes.empty()) {
    trace.branch = Branch::Perfect;
    return {};
  }
  trace.branch = Branch::Structural;
  StepResult result = decide_unbounded(sub, holes, trace);
  if (options.cross_check_bounded && decide_bounded(sub, nullptr).answer != result.answer)
    throw std::logic_error("bounded and unbounded odd-hole checks disagree");
  return result;
}

}  // namespace

const char* to_string(Answer a) {
  switch (a) {
    case Answer::TPerfect: return "t-perfect";
    case Answer::NotTPerfect: return "not-t-perfect";
    case Answer::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(Branch b) {
  switch (b) {
    case Branch::Obstruction: return "obstruction";
    case Branch::ClawFree: return "claw-free";
    case Branch::Perfect: return "perfect";
    case Branch::Structural: return "structural";
  }
  return "?";
}

Branch Verdict::branch() const {
  for (const auto& c : components)
    if (c.answer != Answer::TPerfect) return c.branch;
  Branch best = Branch::Perfect;
  for (const auto& c : components) {
    if (c.branch == Branch::Structural) return Branch::Structural;
    if (c.branch == Branch::ClawFree) best = Branch::ClawFree;
  }
  return best;
}

bool Verdict::fallback_used() const { return !fallback_steps().empty(); }

std::vector<std::string> Verdict::fallback_steps() const {
  std::vector<std::string> out;
  for (const auto& c : components)
    for (const auto& s : c.fallback_steps)
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  return out;
}

Verdict recognize(const Graph& g, const RecognizeOptions& options) {
  if (auto fork = find_induced(g, named_graph(PatternName::fork())))
    throw ScopeError("input contains a fork; recognition is limited to fork-free graphs", *fork);
  Verdict v;
  v.certificate = AcceptanceTrace{};
  for (const auto& comp : connected_components(g)) {
    const auto sub = induced_subgraph(g, comp);
    ComponentTrace trace;
    trace.vertices = sub.to_host;
    StepResult r = decide_component(g, sub, options, trace);
    trace.answer = r.answer;
    v.components.push_back(std::move(trace));
    if (r.answer == Answer::NotTPerfect) {
      v.answer = Answer::NotTPerfect;
      v.certificate = std::move(r.certificate);
      return v;
    }
    if (r.answer == Answer::Inconclusive) v.answer = Answer::Inconclusive;
  }
  return v;
}

bool verify_verdict(const Graph& g, const Verdict& verdict) {
  try {
    if (verdict.answer == Answer::NotTPerfect) {
      if (const auto* p = std::get_if<PatternCertificate>(&verdict.certificate)) {
        const auto& names = small_obstructions();
        return std::find(names.begin(), names.end(), p->match.name) != names.end() &&
               verify_embedding(g, named_graph(p->match.name), p->match.embedding);
      }
      if (const auto* t = std::get_if<TMinorWitness>(&verdict.certificate)) return verify_certificate(g, t->certificate);
      if (const auto* s = std::get_if<StarViolation>(&verdict.certificate)) {
        const auto check = satisfies_star(g, s->hole);
        return !check.satisfied && check.witness == s->check.witness;
      }
      if (const auto* h = std::get_if<OddHoleCertificate>(&verdict.certificate))
        return is_induced_cycle(g, h->hole) && h->hole.length() % 2 == 1 && h->hole.length() >= 7;
      return false;
    }
    if (verdict.answer == Answer::Inconclusive)
      return std::any_of(verdict.components.begin(), verdict.components.end(),
                         [](const ComponentTrace& c) { return c.answer == Answer::Inconclusive; });

    const auto comps = connected_components(g);
    if (comps.size() != verdict.components.size()) return false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& trace = verdict.components[i];
      if (comps[i].members() != trace.vertices || trace.answer != Answer::TPerfect) return false;
      const auto sub = induced_subgraph(g, comps[i]);
      if (find_small_obstruction(sub.graph)) return false;
      switch (trace.branch) {
        case Branch::Obstruction: return false;
        case Branch::ClawFree:
          if (contains_claw(sub.graph) || has_forbidden_t_minor(sub.graph).outcome != TMinorOutcome::Absent) return false;
          break;
        case Branch::Perfect:
          if (!enumerate_induced_odd_cycles(sub.graph, 5).empty()) return false;
          break;
        case Branch::Structural: {
          const auto holes = enumerate_induced_odd_cycles(sub.graph, 5);
          std::vector<Hole> expected;
          for (const auto& h : holes) {
            if (h.length() != 5 || !satisfies_star(sub.graph, h).satisfied) return false;
            expected.push_back(to_host(sub, h));
          }
          if (expected != trace.five_holes || !contains_claw(sub.graph)) return false;
          break;
        }
      }
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace tperfect
