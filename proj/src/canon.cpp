#include "canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace ptl {
namespace {

constexpr int kMax = 64;

struct Search {
  int n = 0;
  std::array<std::uint64_t, kMax> adj{};

  bool have_best = false;
  std::vector<std::uint64_t> best_cert;
  std::array<int, kMax> best_color{};
  std::vector<std::array<int, kMax>> automorphisms;

  // Splits color classes by neighbor counts into every class until stable.
  // Colors stay dense (0..k-1) and the ordering is isomorphism invariant.
  int refine(std::array<int, kMax>& color, int k) const {
    std::array<int, kMax> order{};
    std::array<std::array<std::uint8_t, kMax + 1>, kMax> key{};
    while (true) {
      std::array<std::uint64_t, kMax> mask{};
      for (int v = 0; v < n; ++v) mask[color[v]] |= std::uint64_t{1} << v;
      for (int v = 0; v < n; ++v) {
        key[v][0] = static_cast<std::uint8_t>(color[v]);
        for (int c = 0; c < k; ++c)
          key[v][c + 1] = static_cast<std::uint8_t>(std::popcount(adj[v] & mask[c]));
      }
      std::iota(order.begin(), order.begin() + n, 0);
      auto less = [&](int a, int b) {
        return std::lexicographical_compare(key[a].begin(), key[a].begin() + k + 1, key[b].begin(),
                                            key[b].begin() + k + 1);
      };
      std::sort(order.begin(), order.begin() + n, less);
      int next = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && less(order[i - 1], order[i])) ++next;
        color[order[i]] = next;
      }
      ++next;
      if (next == k) return k;
      k = next;
    }
  }

  std::vector<std::uint64_t> certificate(const std::array<int, kMax>& color) const {
    std::array<int, kMax> at{};
    for (int v = 0; v < n; ++v) at[color[v]] = v;
    std::vector<std::uint64_t> cert(n, 0);
    for (int p = 0; p < n; ++p) {
      std::uint64_t r = adj[at[p]], out = 0;
      while (r) {
        out |= std::uint64_t{1} << color[std::countr_zero(r)];
        r &= r - 1;
      }
      cert[p] = out;
    }
    return cert;
  }

  void leaf(const std::array<int, kMax>& color) {
    auto cert = certificate(color);
    if (!have_best || cert > best_cert) {
      have_best = true;
      best_cert = std::move(cert);
      best_color = color;
    } else if (cert == best_cert) {
      std::array<int, kMax> at{};
      for (int v = 0; v < n; ++v) at[color[v]] = v;
      std::array<int, kMax> gamma{};
      for (int v = 0; v < n; ++v) gamma[v] = at[best_color[v]];
      if (automorphisms.size() < 256) automorphisms.push_back(gamma);
    }
  }

  static int find(std::array<int, kMax>& uf, int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  void descend(std::array<int, kMax> color, int k, std::vector<int>& fixed) {
    k = refine(color, k);
    if (k == n) {
      leaf(color);
      return;
    }
    // Target: the first class with more than one vertex.
    std::array<int, kMax> size{};
    for (int v = 0; v < n; ++v) ++size[color[v]];
    int target = 0;
    while (size[target] == 1) ++target;
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (color[v] == target) cell.push_back(v);

    std::vector<int> explored;
    for (int w : cell) {
      if (!explored.empty()) {
        std::array<int, kMax> uf{};
        std::iota(uf.begin(), uf.begin() + n, 0);
        for (const auto& gamma : automorphisms) {
          bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int x) { return gamma[x] == x; });
          if (!fixes) continue;
          for (int v = 0; v < n; ++v) uf[find(uf, v)] = find(uf, gamma[v]);
        }
        int rw = find(uf, w);
        if (std::any_of(explored.begin(), explored.end(), [&](int u) { return find(uf, u) == rw; }))
          continue;
      }
      explored.push_back(w);
      std::array<int, kMax> child = color;
      for (int v = 0; v < n; ++v)
        if (v != w && color[v] >= target) ++child[v];
      fixed.push_back(w);
      descend(child, k + 1, fixed);
      fixed.pop_back();
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  const int n = g.order();
  if (n > kMax) throw std::invalid_argument("canonical labeling supports at most 64 vertices");
  if (!colors.empty() && static_cast<int>(colors.size()) != n)
    throw std::invalid_argument("color vector size mismatch");

  Search s;
  s.n = n;
  for (int v = 0; v < n; ++v) s.adj[v] = n ? g.row(v)[0] : 0;

  std::array<int, kMax> color{};
  int k = n ? 1 : 0;
  if (!colors.empty()) {
    std::vector<int> values(colors.begin(), colors.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(), colors[v]) - values.begin());
    k = static_cast<int>(values.size());
  }

  CanonicalLabeling out;
  out.code.words.push_back(static_cast<std::uint64_t>(n));
  if (n == 0) return out;
  std::vector<int> fixed;
  s.descend(color, k, fixed);

  out.label.assign(s.best_color.begin(), s.best_color.begin() + n);
  if (!colors.empty()) {
    std::vector<std::uint64_t> by_pos(n);
    for (int v = 0; v < n; ++v) by_pos[out.label[v]] = static_cast<std::uint64_t>(static_cast<std::int64_t>(colors[v]));
    out.code.words.insert(out.code.words.end(), by_pos.begin(), by_pos.end());
  }
  out.code.words.insert(out.code.words.end(), s.best_cert.begin(), s.best_cert.end());
  return out;
}

CanonicalCode canonical_form(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g).label); }

}  // namespace ptl
