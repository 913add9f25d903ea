#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptl {

using Edge = std::pair<int, int>;

// Thrown for malformed textual input; carries the byte offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Simple undirected graph on vertices 0..n-1, stored as bitset rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  // Word-level access to an adjacency row; words() words per row.
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  int words() const { return words_; }

  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  int min_degree() const;
  bool is_connected() const;
  // Vertex sets of connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  // Subgraph induced by the given vertices; vertex i of the result is keep[i].
  Graph induced(const std::vector<int>& keep) const;
  // Relabel: vertex v of *this becomes perm[v] in the result.
  Graph relabeled(const std::vector<int>& perm) const;
  // Copy with one extra vertex adjacent to the given neighbors.
  Graph with_vertex(const std::vector<int>& nbrs) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// graph6: one graph per line; trailing '\n' (and '\r') are ignored.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Cut-vertex flags (true for articulation points).
std::vector<bool> articulation_points(const Graph& g);

// Edge sets of the 2-connected blocks (bridges are single-edge blocks).
// Isolated vertices belong to no block.
std::vector<std::vector<Edge>> biconnected_components(const Graph& g);

}  // namespace ptl
