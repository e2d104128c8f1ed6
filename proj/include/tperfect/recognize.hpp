#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tperfect/graph.hpp"
#include "tperfect/holes.hpp"
#include "tperfect/patterns.hpp"
#include "tperfect/tminor.hpp"

namespace tperfect {

/// The input contains a fork, which puts it outside the decidable class.
class ScopeError : public GraphError {
 public:
  ScopeError(const std::string& what, Embedding fork) : GraphError(what), fork_(std::move(fork)) {}
  const Embedding& fork() const { return fork_; }

 private:
  Embedding fork_;
};

enum class Answer { TPerfect, NotTPerfect, Inconclusive };
/// Which step decided a component.
enum class Branch { Obstruction, ClawFree, Perfect, Structural };

const char* to_string(Answer a);
const char* to_string(Branch b);

/// Induced K4, W5, C7^2 or C10^2, in host labels.
struct PatternCertificate {
  PatternMatch match;
};
/// A five-hole with a vertex violating the neighbour condition.
struct StarViolation {
  Hole hole;
  StarCheck check;
};
/// An induced odd cycle of length 7 or more in a graph containing a claw.
struct OddHoleCertificate {
  Hole hole;
};
/// Steps of a forbidden t-minor, replayable on the whole input graph.
struct TMinorWitness {
  TMinorCertificate certificate;
};
/// Positive answer: per-component branch data lives in the traces.
struct AcceptanceTrace {};

using Certificate = std::variant<AcceptanceTrace, PatternCertificate, TMinorWitness, StarViolation, OddHoleCertificate>;

struct ComponentTrace {
  std::vector<Vertex> vertices;  // host labels
  Answer answer = Answer::TPerfect;
  Branch branch = Branch::Perfect;
  bool has_claw = false;
  /// Five-holes examined (host labels), each confirmed or the failing one last.
  std::vector<Hole> five_holes;
  std::size_t odd_holes = 0;
  /// Exact exponential procedures used instead of polynomial subroutines.
  std::vector<std::string> fallback_steps;
  std::size_t tminor_states = 0;
};

struct Verdict {
  Answer answer = Answer::TPerfect;
  Certificate certificate;
  std::vector<ComponentTrace> components;

  /// Branch of the deciding component: the first rejecting or inconclusive
  /// one, otherwise the most involved accepting branch.
  Branch branch() const;
  bool fallback_used() const;
  std::vector<std::string> fallback_steps() const;
};

enum class HoleSearchMode {
  /// Any odd hole of length other than five rejects.
  Unbounded,
  /// Only holes of length 7..19 are searched after the five-hole checks.
  Bounded
};

struct RecognizeOptions {
  HoleSearchMode hole_search = HoleSearchMode::Unbounded;
  /// In Unbounded mode, also run the bounded search and require the same answer.
  bool cross_check_bounded = true;
  /// Budget for the claw-free fallback; unset uses the per-component default.
  std::optional<TMinorOptions> tminor;
};

/// Throws ScopeError if g contains a fork. Components are decided
/// independently; the answer is their conjunction.
Verdict recognize(const Graph& g, const RecognizeOptions& options = {});

/// Re-checks the certificate (negative answers) or every component trace
/// (positive answers) against g.
bool verify_verdict(const Graph& g, const Verdict& verdict);

}  // namespace tperfect
