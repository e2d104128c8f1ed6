#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tperfect/graph.hpp"
#include "tperfect/patterns.hpp"

namespace tperfect {

/// Contracts N(v) ∪ {v} into one vertex. The merged vertex keeps the role of
/// v and is adjacent to every vertex at distance two from v; the vertices of
/// N(v) disappear and the remaining labels are renumbered densely in
/// increasing order. Throws PreconditionError naming an edge inside N(v).
Graph t_contract(const Graph& g, Vertex v);

/// Label of `v` after t_contract(g, center), or -1 if v was absorbed.
Vertex t_contract_relabel(const Graph& g, Vertex center, Vertex v);

struct DeleteStep {
  std::vector<Vertex> vertices;  // labels of the graph the step applies to
  bool operator==(const DeleteStep&) const = default;
};
struct ContractStep {
  Vertex center = 0;
  bool operator==(const ContractStep&) const = default;
};
using TMinorStep = std::variant<DeleteStep, ContractStep>;

struct TMinorCertificate {
  std::vector<TMinorStep> steps;
  PatternName target;

  /// One line per step: "delete 3 5", "contract 2", then "target W5".
  std::string script() const;
  static TMinorCertificate parse_script(const std::string& text);
};

/// Applies the steps in order; throws PreconditionError on an invalid step.
Graph replay(const Graph& g, const TMinorCertificate& certificate);
/// Replay succeeds and ends in a graph isomorphic to the target.
bool verify_certificate(const Graph& g, const TMinorCertificate& certificate);

enum class TMinorOutcome { Found, Absent, Inconclusive };

struct TMinorOptions {
  /// Maximum number of distinct states expanded; unset means unlimited.
  std::optional<std::size_t> budget;
  /// Default budget: unlimited up to order 10, 1,000,000 states above.
  static TMinorOptions defaults_for(const Graph& g);
};

struct TMinorResult {
  TMinorOutcome outcome = TMinorOutcome::Absent;
  std::optional<TMinorCertificate> certificate;
  std::size_t states_explored = 0;
};

/// Exhaustive search over vertex deletions and t-contractions for C7^2, C10^2
/// or an odd wheel (W3 = K4 included), memoized on canonical codes.
TMinorResult has_forbidden_t_minor(const Graph& g, const TMinorOptions& options);
TMinorResult has_forbidden_t_minor(const Graph& g);

const char* to_string(TMinorOutcome outcome);

}  // namespace tperfect
