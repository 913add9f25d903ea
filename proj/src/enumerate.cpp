#include "enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "canon.hpp"

namespace ptl {
namespace {

struct Generator {
  int max_n;
  const Pruner& prune;
  const std::function<void(const Graph&)>& visit;
  Partition part;
  long long split_counter = 0;

  CanonicalCode marked_code(const Graph& g, int v) const {
    std::vector<int> colors(g.order(), 0);
    colors[v] = 1;
    return canonical_labeling(g, colors).code;
  }

  // First half of the canonical-deletion test, using only cheap invariants:
  // the new vertex must be a non-cut vertex of minimum degree among non-cut
  // vertices, with maximal neighbor-degree sum. Fills the vertices that tie.
  static bool preferred(const Graph& g, int v, std::vector<int>& eligible) {
    const int n = g.order();
    auto cut = articulation_points(g);
    if (cut[v]) return false;
    std::vector<int> degree(n);
    for (int u = 0; u < n; ++u) degree[u] = g.degree(u);
    int best_deg = n;
    for (int u = 0; u < n; ++u)
      if (!cut[u]) best_deg = std::min(best_deg, degree[u]);
    if (degree[v] != best_deg) return false;

    auto nbr_sum = [&](int u) {
      int s = 0;
      for (int w : g.neighbors(u)) s += degree[w];
      return s;
    };
    eligible.clear();
    int best_sum = -1;
    for (int u = 0; u < n; ++u) {
      if (cut[u] || degree[u] != best_deg) continue;
      int s = nbr_sum(u);
      if (s > best_sum) {
        best_sum = s;
        eligible.clear();
      }
      if (s == best_sum) eligible.push_back(u);
    }
    return nbr_sum(v) == best_sum;
  }

  // Second half: among the tied vertices the new one must carry the largest
  // marked canonical code, i.e. lie in the orbit of the canonical choice.
  bool canonical_choice(const Graph& g, int v, const std::vector<int>& eligible,
                        CanonicalCode& code) const {
    code = marked_code(g, v);
    for (int u : eligible) {
      if (u == v) continue;
      if (marked_code(g, u) > code) return false;
    }
    return true;
  }

  void grow(const Graph& parent) {
    const int n = parent.order() + 1;
    std::set<CanonicalCode> seen;
    const unsigned limit = 1u << parent.order();
    std::vector<int> nbrs, eligible;
    for (unsigned mask = 1; mask < limit; ++mask) {
      nbrs.clear();
      for (int u = 0; u < parent.order(); ++u)
        if (mask >> u & 1u) nbrs.push_back(u);
      Graph child = parent.with_vertex(nbrs);
      const int v = n - 1;
      if (!preferred(child, v, eligible)) continue;
      if (prune && prune(child, v)) continue;
      CanonicalCode code;
      if (!canonical_choice(child, v, eligible, code)) continue;
      if (!seen.insert(code).second) continue;
      node(child);
    }
  }

  void node(const Graph& g) {
    const int n = g.order();
    if (n == part.split_level) {
      if (split_counter++ % part.count != part.index) return;
    }
    if (n >= part.split_level || part.index == 0) visit(g);
    if (n < max_n) grow(g);
  }
};

}  // namespace

void enumerate_connected_levels(int max_n, const Pruner& prune,
                                const std::function<void(const Graph&)>& visit,
                                const Partition& part) {
  if (max_n < 1) throw std::invalid_argument("vertex count must be at least 1");
  if (max_n > 30) throw std::invalid_argument("exhaustive enumeration limited to 30 vertices");
  if (part.count < 1 || part.index < 0 || part.index >= part.count)
    throw std::invalid_argument("invalid partition");
  Generator gen{max_n, prune, visit, part};
  Graph root(1);
  if (prune && prune(root, 0)) return;
  gen.node(root);
}

std::vector<Graph> enumerate_graphs(int n, const Pruner& prune, const Partition& part) {
  std::vector<std::pair<CanonicalCode, Graph>> found;
  enumerate_connected_levels(
      n, prune,
      [&](const Graph& g) {
        if (g.order() != n) return;
        auto lab = canonical_labeling(g);
        found.emplace_back(lab.code, g.relabeled(lab.label));
      },
      part);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace ptl
