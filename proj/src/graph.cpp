#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace ptl {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("edge endpoint out of range");
  if (has_edge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return;
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --m_;
}

int Graph::degree(int v) const {
  int d = 0;
  const auto* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  const auto* r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t x = r[w];
    while (x) {
      out.push_back(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n_, 0);
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

Graph Graph::induced(const std::vector<int>& keep) const {
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (has_edge(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  Graph h(n_);
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph Graph::with_vertex(const std::vector<int>& nbrs) const {
  Graph h(n_ + 1);
  for (auto [u, v] : edges()) h.add_edge(u, v);
  for (int w : nbrs) h.add_edge(n_, w);
  return h;
}

namespace {

constexpr int kBias = 63;

bool printable6(unsigned char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;
  if (pos >= end) throw ParseError("empty graph6 line", pos);

  auto take6 = [&](std::size_t at) -> int {
    if (at >= end) throw ParseError("malformed length header: truncated", at);
    auto c = static_cast<unsigned char>(text[at]);
    if (!printable6(c))
      throw ParseError("malformed length header: byte out of range", at);
    return c - kBias;
  };

  long long n = 0;
  auto c0 = static_cast<unsigned char>(text[pos]);
  if (c0 == 126) {
    if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) == 126) {
      for (int i = 0; i < 6; ++i) n = (n << 6) | take6(pos + 2 + i);
      pos += 8;
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | take6(pos + 1 + i);
      pos += 4;
    }
  } else {
    n = take6(pos);
    pos += 1;
  }
  if (n > (1 << 20)) throw ParseError("vertex count too large", 0);

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  for (std::size_t i = pos; i < end; ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (!printable6(c)) throw ParseError("character out of range", i);
  }
  if (end - pos < need) throw ParseError("truncated adjacency data", end);
  if (end - pos > need) throw ParseError("trailing bytes", pos + need);

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(text[pos + k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

std::string write_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<bool> articulation_points(const Graph& g) {
  const int n = g.order();
  std::vector<bool> cut(n, false);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        ++children;
        if (parent >= 0 && low[w] >= disc[v]) cut[v] = true;
      }
    }
    if (parent < 0 && children > 1) cut[v] = true;
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return cut;
}

std::vector<std::vector<Edge>> biconnected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(std::min(v, w), std::max(v, w));
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<Edge> comp;
          const Edge top{std::min(v, w), std::max(v, w)};
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            comp.push_back(e);
            if (e == top) break;
          }
          std::sort(comp.begin(), comp.end());
          out.push_back(std::move(comp));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(std::min(v, w), std::max(v, w));
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ptl
