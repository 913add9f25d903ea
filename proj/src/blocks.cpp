#include "blocks.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ptl {

std::string to_string(BlockClass c) {
  switch (c) {
    case BlockClass::B2: return "B2-trivial";
    case BlockClass::B3: return "B3-triangle";
    case BlockClass::B4Diamond: return "B4-diamond";
    case BlockClass::B4K4: return "B4-K4";
    case BlockClass::B5: return "B5-variant";
    case BlockClass::B6Plus: return "B6+-other";
  }
  return "?";
}

BlockClass classify_shape(int vertices, int edges) {
  if (vertices == 2 && edges == 1) return BlockClass::B2;
  if (vertices == 3 && edges == 3) return BlockClass::B3;
  if (vertices == 4 && edges == 5) return BlockClass::B4Diamond;
  if (vertices == 4 && edges == 6) return BlockClass::B4K4;
  if (vertices == 5) return BlockClass::B5;
  return BlockClass::B6Plus;
}

namespace {

Edge key(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

bool bounded_triangle(const PlaneGraph& pg, int f) { return f != pg.outer() && pg.face_length(f) == 3; }

void finish(TriangularBlock& b) {
  std::sort(b.edges.begin(), b.edges.end());
  std::set<int> vs;
  for (auto [u, v] : b.edges) {
    vs.insert(u);
    vs.insert(v);
  }
  b.vertices.assign(vs.begin(), vs.end());
  b.cls = classify_shape(static_cast<int>(b.vertices.size()), static_cast<int>(b.edges.size()));
  if (b.cls == BlockClass::B5) {
    std::vector<int> deg;
    for (int x : b.vertices) {
      int d = 0;
      for (auto [u, v] : b.edges) d += (u == x) + (v == x);
      deg.push_back(d);
    }
    std::sort(deg.begin(), deg.end());
    std::ostringstream os;
    os << "e=" << b.edges.size() << ";deg=";
    for (std::size_t i = 0; i < deg.size(); ++i) os << (i ? "," : "") << deg[i];
    b.signature = os.str();
  }
}

}  // namespace

TriangularBlock block_of(const PlaneGraph& pg, int u, int v) {
  if (!pg.graph().has_edge(u, v))
    throw std::out_of_range("unknown edge " + std::to_string(u) + "-" + std::to_string(v));
  std::set<Edge> in{key(u, v)};
  std::vector<Edge> work{key(u, v)};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (int f : {pg.face_of(a, b), pg.face_of(b, a)}) {
      if (!bounded_triangle(pg, f)) continue;
      const auto& w = pg.faces()[f];
      for (int i = 0; i < 3; ++i) {
        Edge e = key(w[i], w[(i + 1) % 3]);
        if (in.insert(e).second) work.push_back(e);
      }
    }
  }
  TriangularBlock block;
  block.edges.assign(in.begin(), in.end());
  finish(block);
  return block;
}

BlockDecomposition decompose(const PlaneGraph& pg) {
  BlockDecomposition d;
  for (auto e : pg.graph().edges()) {
    if (d.block_of_edge.count(e)) continue;
    auto b = block_of(pg, e.first, e.second);
    const int id = static_cast<int>(d.blocks.size());
    for (auto be : b.edges) d.block_of_edge[be] = id;
    ++d.counts[b.cls];
    d.blocks.push_back(std::move(b));
  }
  return d;
}

BlockClass classify(const PlaneGraph& pg, const TriangularBlock& b) {
  if (b.edges.empty()) throw std::logic_error("empty block");
  auto again = block_of(pg, b.edges.front().first, b.edges.front().second);
  auto sorted = b.edges;
  std::sort(sorted.begin(), sorted.end());
  if (again.edges != sorted) throw std::logic_error("inconsistent block: edge set is not a triangle closure");
  return classify_shape(static_cast<int>(again.vertices.size()), static_cast<int>(again.edges.size()));
}

std::optional<TriangularBlock> find_big_block(const PlaneGraph& pg) {
  for (auto& b : decompose(pg).blocks)
    if (b.vertices.size() >= 5 || b.cls == BlockClass::B4K4) return b;
  return std::nullopt;
}

}  // namespace ptl
