#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "embed.hpp"

namespace ptl {

enum class BlockClass { B2, B3, B4Diamond, B4K4, B5, B6Plus };

std::string to_string(BlockClass c);

struct TriangularBlock {
  std::vector<Edge> edges;     // (u, v) with u < v, sorted
  std::vector<int> vertices;   // sorted
  BlockClass cls = BlockClass::B2;
  // Five-vertex blocks only: "e=<edges>;deg=<sorted degree multiset>".
  std::string signature;
};

struct BlockDecomposition {
  std::vector<TriangularBlock> blocks;
  std::map<BlockClass, int> counts;
  // Block index of every edge, keyed by (u, v) with u < v.
  std::map<Edge, int> block_of_edge;
};

// Closure of {e} under "add the other two edges of a bounded 3-face
// containing a current edge". The outer face never counts as bounded.
TriangularBlock block_of(const PlaneGraph& pg, int u, int v);
BlockDecomposition decompose(const PlaneGraph& pg);

// Tag by (vertex count, edge count). The (pg, block) overload first checks
// that the block is a closed, triangle-connected edge set of pg and throws
// std::logic_error otherwise.
BlockClass classify_shape(int vertices, int edges);
BlockClass classify(const PlaneGraph& pg, const TriangularBlock& b);

// The first block with five or more vertices or isomorphic to K4, if any.
std::optional<TriangularBlock> find_big_block(const PlaneGraph& pg);
inline bool check_no_big_blocks(const PlaneGraph& pg) { return !find_big_block(pg).has_value(); }

}  // namespace ptl
