#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace ptl {

// A small connected graph (3..8 vertices) matched as a subgraph, not induced.
struct Pattern {
  std::string name;
  Graph graph;
  bool theta5 = false;  // isomorphic to theta-5; routed to the specialized finder
};

// G is free of the family iff no pattern occurs as a subgraph.
struct FamilySpec {
  std::string name;
  std::vector<Pattern> patterns;
};

// Occurrence map: occurrence[i] is the host vertex of pattern vertex i.
using Occurrence = std::vector<int>;

Pattern make_pattern(std::string name, Graph g);
Pattern complete_pattern(int k);
Pattern cycle_pattern(int k);
// One pattern per isomorphism class of C_k plus a chord.
std::vector<Pattern> theta_patterns(int k);

std::vector<std::string> family_preset_names();
// Presets: K4, Theta4, Theta5, Theta6, C4, C5, C6, K4+Theta5.
FamilySpec family_preset(std::string_view name);

std::optional<Occurrence> contains_subgraph(const Graph& g, const Pattern& p);
// Occurrences that use host vertex v.
std::optional<Occurrence> contains_subgraph_through(const Graph& g, const Pattern& p, int v);

// Specialized theta-5 search: a 5-cycle with one chord. Mapped onto the
// labeling of theta_patterns(5)[0] (cycle 0..4, chord 0-2). If through >= 0
// only cycles containing that vertex are considered.
std::optional<Occurrence> find_theta5(const Graph& g, int through = -1);

bool occurrence_valid(const Graph& g, const Pattern& p, const Occurrence& occ);

struct FreenessResult {
  bool free = true;
  std::string pattern;   // name of the pattern found, when not free
  Occurrence occurrence;
};

FreenessResult is_family_free(const Graph& g, const FamilySpec& fam);
// Only occurrences through v; used for incremental checks during search.
FreenessResult is_family_free_through(const Graph& g, const FamilySpec& fam, int v);

}  // namespace ptl
