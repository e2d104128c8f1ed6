#include "tperfect/report.hpp"

#include <cstdio>

namespace tperfect {

namespace {

template <class E, std::size_t N>
E enum_from(const std::string& text, const E (&values)[N], const char* what) {
  for (E v : values)
    if (text == to_string(v)) return v;
  throw GraphError(std::string("unknown ") + what + " '" + text + "'");
}

constexpr Answer kAnswers[] = {Answer::TPerfect, Answer::NotTPerfect, Answer::Inconclusive};
constexpr Branch kBranches[] = {Branch::Obstruction, Branch::ClawFree, Branch::Perfect, Branch::Structural};

Hole hole_from(const Json& j) { return Hole{j.get<std::vector<Vertex>>()}; }

}  // namespace

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Json to_json(const Hole& h) { return Json(h.cycle); }

Json to_json(const TMinorCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    if (const auto* d = std::get_if<DeleteStep>(&s)) {
      steps.push_back({{"op", "delete"}, {"vertices", d->vertices}});
    } else {
      steps.push_back({{"op", "contract"}, {"center", std::get<ContractStep>(s).center}});
    }
  }
  return {{"steps", steps}, {"target", c.target.to_string()}};
}

Json to_json(const TMinorResult& r) {
  Json j = {{"outcome", to_string(r.outcome)}, {"states_explored", r.states_explored}};
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  return j;
}

Json to_json(const Certificate& c) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AcceptanceTrace>) {
          return {{"kind", "acceptance-trace"}};
        } else if constexpr (std::is_same_v<T, PatternCertificate>) {
          return {{"kind", "induced-pattern"}, {"pattern", x.match.name.to_string()}, {"embedding", x.match.embedding.image}};
        } else if constexpr (std::is_same_v<T, TMinorWitness>) {
          Json j = to_json(x.certificate);
          j["kind"] = "t-minor";
          return j;
        } else if constexpr (std::is_same_v<T, StarViolation>) {
          return {{"kind", "star-violation"},
                  {"hole", to_json(x.hole)},
                  {"witness", *x.check.witness},
                  {"positions", x.check.positions},
                  {"reason", x.check.reason}};
        } else {
          return {{"kind", "odd-hole"}, {"hole", to_json(x.hole)}, {"length", x.hole.length()}};
        }
      },
      c);
}

Json to_json(const Verdict& v) {
  Json comps = Json::array();
  for (const auto& c : v.components) {
    Json holes = Json::array();
    for (const auto& h : c.five_holes) holes.push_back(to_json(h));
    comps.push_back({{"vertices", c.vertices},
                     {"answer", to_string(c.answer)},
                     {"branch", to_string(c.branch)},
                     {"has_claw", c.has_claw},
                     {"odd_holes", c.odd_holes},
                     {"five_holes", holes},
                     {"fallback_steps", c.fallback_steps},
                     {"tminor_states", c.tminor_states}});
  }
  return {{"answer", to_string(v.answer)},
          {"branch", to_string(v.branch())},
          {"certificate", to_json(v.certificate)},
          {"fallback_steps_used", v.fallback_steps()},
          {"components", comps}};
}

Json to_json(const Coloring& c) {
  Json classes = Json::array();
  for (const auto& s : c.classes()) classes.push_back(s.members());
  Json comps = Json::array();
  for (const auto& cc : c.components) {
    Json j = {{"vertices", cc.vertices}, {"branch", to_string(cc.branch)}};
    if (cc.hole) j["hole"] = to_json(*cc.hole);
    comps.push_back(std::move(j));
  }
  return {{"color_count", c.color_count()},
          {"branch", to_string(c.branch())},
          {"colors", c.colors},
          {"classes", classes},
          {"components", comps}};
}

Json to_json(const StrongCheckReport& r) {
  Json j = {{"w_max", r.w_max},
            {"weightings_checked", r.weightings_checked},
            {"passed", r.passed},
            {"summary", r.summary()}};
  if (r.violation) {
    j["violation"] = r.violation->values;
    j["alpha_w"] = r.alpha;
    j["cover_cost"] = r.cover_cost;
  }
  return j;
}

Json to_json(const WCover& c) {
  Json elems = Json::array();
  for (const auto& [e, k] : c.elements) elems.push_back({{"element", e.to_string()}, {"multiplicity", k}});
  return {{"cost", c.cost}, {"elements", elems}};
}

Certificate certificate_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "acceptance-trace") return AcceptanceTrace{};
    if (kind == "induced-pattern")
      return PatternCertificate{PatternMatch{PatternName::parse(j.at("pattern").get<std::string>()),
                                             Embedding{j.at("embedding").get<std::vector<Vertex>>()}}};
    if (kind == "t-minor") {
      TMinorCertificate c;
      for (const auto& s : j.at("steps")) {
        const std::string op = s.at("op").get<std::string>();
        if (op == "delete")
          c.steps.emplace_back(DeleteStep{s.at("vertices").get<std::vector<Vertex>>()});
        else if (op == "contract")
          c.steps.emplace_back(ContractStep{s.at("center").get<Vertex>()});
        else
          throw GraphError("unknown t-minor step '" + op + "'");
      }
      c.target = PatternName::parse(j.at("target").get<std::string>());
      return TMinorWitness{std::move(c)};
    }
    if (kind == "star-violation") {
      StarCheck check;
      check.satisfied = false;
      check.witness = j.at("witness").get<Vertex>();
      check.positions = j.at("positions").get<std::vector<int>>();
      check.reason = j.at("reason").get<std::string>();
      return StarViolation{hole_from(j.at("hole")), check};
    }
    if (kind == "odd-hole") return OddHoleCertificate{hole_from(j.at("hole"))};
    throw GraphError("unknown certificate kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed certificate: ") + e.what());
  }
}

Verdict verdict_from_json(const Json& j) {
  try {
    Verdict v;
    v.answer = enum_from(j.at("answer").get<std::string>(), kAnswers, "answer");
    v.certificate = certificate_from_json(j.at("certificate"));
    for (const auto& c : j.at("components")) {
      ComponentTrace t;
      t.vertices = c.at("vertices").get<std::vector<Vertex>>();
      t.answer = enum_from(c.at("answer").get<std::string>(), kAnswers, "answer");
      t.branch = enum_from(c.at("branch").get<std::string>(), kBranches, "branch");
      t.has_claw = c.at("has_claw").get<bool>();
      t.odd_holes = c.at("odd_holes").get<std::size_t>();
      for (const auto& h : c.at("five_holes")) t.five_holes.push_back(hole_from(h));
      t.fallback_steps = c.at("fallback_steps").get<std::vector<std::string>>();
      t.tminor_states = c.at("tminor_states").get<std::size_t>();
      v.components.push_back(std::move(t));
    }
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed verdict: ") + e.what());
  }
}

}  // namespace tperfect
