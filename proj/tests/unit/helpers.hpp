#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "embed.hpp"
#include "graph.hpp"
#include "patterns.hpp"

namespace testing {

using ptl::Edge;
using ptl::Graph;

inline Graph cycle(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

inline Graph path(int k) {
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  return g;
}

// K4 minus the edge 2-3: triangles 0-1-2 and 0-1-3 share the spine 0-1.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

// Triangles 0-1-2 and 0-3-4 sharing vertex 0.
inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

// Spine 0-1 plus pages 2, 3, 4.
inline Graph book3() {
  Graph g(5, {{0, 1}});
  for (int t = 2; t < 5; ++t) {
    g.add_edge(0, t);
    g.add_edge(1, t);
  }
  return g;
}

// Hub 0 with rim 1-2-3-4.
inline Graph wheel4() {
  Graph g(5);
  for (int i = 1; i <= 4; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % 4 + 1);
  }
  return g;
}

inline Graph icosahedron() {
  // Two poles 0 and 11, upper ring 1..5, lower ring 6..10.
  Graph g(12);
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i, un = 1 + (i + 1) % 5, w = 6 + i, wn = 6 + (i + 1) % 5;
    g.add_edge(0, u);
    g.add_edge(11, w);
    g.add_edge(u, un);
    g.add_edge(w, wn);
    g.add_edge(u, w);
    g.add_edge(un, w);
  }
  return g;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Graph on n vertices from the bits of mask over pairs (0,1), (0,2), ..., (n-2,n-1).
inline Graph from_mask(int n, unsigned long long mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

inline unsigned long long to_mask(const Graph& g) {
  unsigned long long mask = 0;
  int bit = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v, ++bit)
      if (g.has_edge(u, v)) mask |= 1ULL << bit;
  return mask;
}

// Isomorphism classes of labeled graphs on n <= 7 vertices, counted by
// marking whole permutation orbits. keep selects which classes count.
template <class Keep>
long long orbit_count(int n, Keep keep) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> pair_image(perms.size(), std::vector<int>(pairs));
  std::vector<std::pair<int, int>> pair_of;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pair_of.push_back({u, v});
  auto index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return u * n - u * (u + 1) / 2 + (v - u - 1);
  };
  for (std::size_t k = 0; k < perms.size(); ++k)
    for (int b = 0; b < pairs; ++b) pair_image[k][b] = index(perms[k][pair_of[b].first], perms[k][pair_of[b].second]);

  std::vector<char> seen(1ULL << pairs, 0);
  long long classes = 0;
  for (unsigned long long mask = 0; mask < (1ULL << pairs); ++mask) {
    if (seen[mask]) continue;
    for (const auto& img : pair_image) {
      unsigned long long m = 0;
      for (int b = 0; b < pairs; ++b)
        if ((mask >> b) & 1) m |= 1ULL << img[b];
      seen[m] = 1;
    }
    if (keep(from_mask(n, mask))) ++classes;
  }
  return classes;
}

// Smallest adjacency mask over all relabelings; n <= 7.
inline unsigned long long brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  unsigned long long best = ~0ULL;
  do best = std::min(best, to_mask(g.relabeled(p)));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Subgraph containment by trying every injective map.
inline bool brute_contains(const Graph& g, const Graph& p) {
  const int k = p.order(), n = g.order();
  if (k > n) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  auto pe = p.edges();
  do {
    std::vector<int> chosen;
    for (int v = 0; v < n; ++v)
      if (pick[v]) chosen.push_back(v);
    std::sort(chosen.begin(), chosen.end());
    do {
      bool ok = true;
      for (auto [a, b] : pe)
        if (!g.has_edge(chosen[a], chosen[b])) {
          ok = false;
          break;
        }
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

// Rotation systems of genus 0 counted up to reflection, by trying every
// cyclic order at every vertex.
inline std::size_t brute_rotation_count(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<std::vector<int>>> choices(n);
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() <= 2) {
      choices[v].push_back(nb);
      continue;
    }
    std::vector<int> rest(nb.begin() + 1, nb.end());
    do {
      std::vector<int> c{nb.front()};
      c.insert(c.end(), rest.begin(), rest.end());
      choices[v].push_back(c);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  auto normalize = [](std::vector<int> c) {
    if (c.empty()) return c;
    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
    return c;
  };
  auto mirror = [&](const ptl::RotationSystem& r) {
    ptl::RotationSystem m = r;
    for (auto& c : m) {
      std::reverse(c.begin(), c.end());
      c = normalize(c);
    }
    return m;
  };
  const int want = 2 - n + g.size();
  std::set<ptl::RotationSystem> found;
  ptl::RotationSystem rot(n);
  std::vector<std::size_t> at(n, 0);
  while (true) {
    for (int v = 0; v < n; ++v) rot[v] = normalize(choices[v][at[v]]);
    if (static_cast<int>(ptl::trace_faces(rot).size()) == want) found.insert(std::min(rot, mirror(rot)));
    int v = 0;
    while (v < n && ++at[v] == choices[v].size()) at[v++] = 0;
    if (v == n) break;
  }
  return found.size();
}

// 3-core by rounds: strip every vertex of degree < 3 until stable.
inline std::vector<int> core_by_rounds(const Graph& g) {
  std::vector<int> alive(g.order());
  std::iota(alive.begin(), alive.end(), 0);
  while (true) {
    Graph h = g.induced(alive);
    std::vector<int> next;
    for (int i = 0; i < h.order(); ++i)
      if (h.degree(i) >= 3) next.push_back(alive[i]);
    if (next.size() == alive.size()) return alive;
    alive = next;
  }
}

}  // namespace testing
