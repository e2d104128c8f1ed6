#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tperfect/graph.hpp"

namespace tperfect {

/// Isomorphism-invariant label: two graphs get equal codes iff they are
/// isomorphic. The code is the upper-triangle adjacency bitstring of the
/// canonical form, prefixed by the order.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  CanonicalCode(int order, std::vector<std::uint64_t> bits) : order_(order), bits_(std::move(bits)) {}

  int order() const { return order_; }
  const std::vector<std::uint64_t>& bits() const { return bits_; }
  std::size_t hash() const;
  /// Hex rendering, stable across runs.
  std::string to_string() const;

  auto operator<=>(const CanonicalCode&) const = default;
  bool operator==(const CanonicalCode&) const = default;

 private:
  int order_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Canonical labelling: `labeling[p]` is the vertex of `g` placed at canonical
/// position p.
struct CanonicalForm {
  CanonicalCode code;
  std::vector<Vertex> labeling;
  Graph graph;
};

CanonicalForm canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// All graphs of the given order up to isomorphism, in canonical form, sorted
/// by code. Built by one-vertex augmentation from the previous order.
std::vector<Graph> enumerate_graphs(int order);

}  // namespace tperfect

template <>
struct std::hash<tperfect::CanonicalCode> {
  std::size_t operator()(const tperfect::CanonicalCode& c) const noexcept { return c.hash(); }
};
