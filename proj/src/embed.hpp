#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace ptl {

// Cyclic order of neighbors around every vertex.
using RotationSystem = std::vector<std::vector<int>>;

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A connected graph with a planar rotation system, its faces, and a
// designated outer face.
//
// Faces are closed walks of directed half-edges. The walk after u->v
// continues with v->w where w follows u in the rotation at v. A face is
// stored as the vertex sequence of its walk; its length is the number of
// half-edges (a bridge contributes 2 to the face that contains it). Faces
// are numbered in order of their smallest half-edge (u, v) under
// lexicographic order, so face 0 is the default outer face.
class PlaneGraph {
 public:
  // Validates the rotation against the graph and checks Euler's formula.
  // outer < 0 selects the default outer face.
  PlaneGraph(Graph g, RotationSystem rotation, int outer = -1);

  const Graph& graph() const { return graph_; }
  const RotationSystem& rotation() const { return rotation_; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int face_length(int f) const { return static_cast<int>(faces_[f].size()); }
  int outer() const { return outer_; }
  void set_outer(int f);

  // Face containing the half-edge u->v; throws std::out_of_range for a non-edge.
  int face_of(int u, int v) const;
  // Lengths of the faces on the two sides of edge {u, v}.
  std::pair<int, int> faces_of_edge(int u, int v) const;

 private:
  int slot(int u, int v) const;

  Graph graph_;
  RotationSystem rotation_;
  std::vector<std::vector<int>> faces_;
  std::vector<std::vector<int>> face_at_;  // aligned with rotation_
  int outer_ = 0;
};

// Faces of a rotation system without any validation; used by the builders.
std::vector<std::vector<int>> trace_faces(const RotationSystem& rotation);

struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind = Kind::K5;
  std::vector<int> branch;               // 5 or 6 branch vertices
  std::vector<std::vector<int>> paths;   // branch-to-branch paths
};

std::string to_string(KuratowskiWitness::Kind k);

// Empty string when the witness is a valid subdivision inside g, otherwise
// the reason it is not.
std::string validate_witness(const Graph& g, const KuratowskiWitness& w);

// Boyer-Myrvold planarity test. Requires a connected graph.
std::variant<PlaneGraph, KuratowskiWitness> test_planarity(const Graph& g);
bool is_planar(const Graph& g);

// Every planar embedding of a connected graph: one PlaneGraph per
// (rotation system up to reflection, outer face) pair. Throws
// std::length_error when g has more than max_n vertices.
void for_each_embedding(const Graph& g, const std::function<void(const PlaneGraph&)>& visit,
                        int max_n = 12);
// Rotation systems only, one per reflection pair.
void for_each_rotation(const Graph& g, const std::function<void(const RotationSystem&)>& visit,
                       int max_n = 12);
std::vector<PlaneGraph> all_embeddings(const Graph& g, int max_n = 12);

// Text exchange format: "n e f outer" then one rotation line per vertex.
std::string write_embedding(const PlaneGraph& pg);
PlaneGraph parse_embedding(std::string_view text);

}  // namespace ptl
