#pragma once

#include <functional>
#include <vector>

#include "graph.hpp"

namespace ptl {

// Returns true when a partial graph must be discarded. `added` is the vertex
// that was just attached. The predicate must be hereditary: if it rejects a
// graph it must reject every graph containing it as an induced subgraph.
using Pruner = std::function<bool(const Graph& g, int added)>;

// Deterministic split of the generation tree: subtrees rooted at level
// `split_level` are numbered in generation order and worker `index` of
// `count` takes those with number % count == index. Graphs on fewer than
// split_level vertices are reported by worker 0 only.
struct Partition {
  int index = 0;
  int count = 1;
  int split_level = 5;
};

// Visits one representative of every isomorphism class of connected graphs
// on 1..max_n vertices that survives the pruner (canonical augmentation by
// vertex addition, deleting a non-cut vertex).
void enumerate_connected_levels(int max_n, const Pruner& prune,
                                const std::function<void(const Graph&)>& visit,
                                const Partition& part = {});

// Connected graphs on exactly n vertices, sorted by canonical code; each
// graph is returned in its canonical labeling.
std::vector<Graph> enumerate_graphs(int n, const Pruner& prune = {}, const Partition& part = {});

}  // namespace ptl
