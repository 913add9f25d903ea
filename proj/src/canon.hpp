#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace ptl {

// Total-order key of an isomorphism class (of vertex-colored graphs when
// colors are supplied). Equal codes iff isomorphic.
struct CanonicalCode {
  std::vector<std::uint64_t> words;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalLabeling {
  // label[v] is the canonical position of vertex v.
  std::vector<int> label;
  CanonicalCode code;
};

// Supports up to 64 vertices. colors (optional) is a per-vertex integer
// color that isomorphisms must preserve.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});
CanonicalCode canonical_form(const Graph& g);
// The canonical representative: g relabeled by its canonical labeling.
Graph canonical_graph(const Graph& g);

}  // namespace ptl
