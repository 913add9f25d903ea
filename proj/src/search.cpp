#include "search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "canon.hpp"
#include "construct.hpp"
#include "embed.hpp"

namespace ptl {

namespace {

void check_range(int n, const SearchLimits& limits) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (n > limits.cap())
    throw BoundExceeded("n = " + std::to_string(n) + " exceeds the exhaustive bound " +
                        std::to_string(limits.cap()));
}

std::string canonical_g6(const Graph& g) { return write_graph6(canonical_graph(g)); }

Graph disjoint_union(const std::vector<Graph>& parts) {
  int n = 0;
  for (const auto& p : parts) n += p.order();
  Graph g(n);
  int off = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) g.add_edge(u + off, v + off);
    off += p.order();
  }
  return g;
}

}  // namespace

std::vector<LevelResult> search_levels(int max_n, const FamilySpec& fam, const Partition& part) {
  std::vector<LevelResult> levels(max_n + 1);
  for (int i = 0; i <= max_n; ++i) levels[i].n = i;
  Pruner prune = [&](const Graph& g, int added) {
    if (!is_family_free_through(g, fam, added).free) return true;
    // Fewer than 9 edges cannot hold a K5 or K3,3 subdivision.
    return g.size() >= 9 && !is_planar(g);
  };
  enumerate_connected_levels(
      max_n, prune,
      [&](const Graph& g) {
        auto& L = levels[g.order()];
        ++L.examined;
        if (g.size() < L.ex) return;
        if (g.size() > L.ex) {
          L.ex = g.size();
          L.witnesses.clear();
        }
        L.witnesses.push_back(canonical_g6(g));
      },
      part);
  for (auto& L : levels) std::sort(L.witnesses.begin(), L.witnesses.end());
  return levels;
}

std::vector<LevelResult> merge_levels(const std::vector<std::vector<LevelResult>>& parts) {
  std::size_t size = 0;
  for (const auto& p : parts) size = std::max(size, p.size());
  std::vector<LevelResult> out(size);
  for (std::size_t i = 0; i < size; ++i) {
    out[i].n = static_cast<int>(i);
    std::set<std::string> w;
    for (const auto& p : parts) {
      if (i >= p.size()) continue;
      const auto& L = p[i];
      out[i].examined += L.examined;
      if (L.ex > out[i].ex) {
        out[i].ex = L.ex;
        w.clear();
      }
      if (L.ex == out[i].ex) w.insert(L.witnesses.begin(), L.witnesses.end());
    }
    out[i].witnesses.assign(w.begin(), w.end());
  }
  return out;
}

SearchReport finish_report(int n, const FamilySpec& fam, const std::vector<LevelResult>& levels) {
  if (n >= static_cast<int>(levels.size())) throw std::invalid_argument("missing level results");
  SearchReport r;
  r.n = n;
  r.family = fam.name;
  r.ex = levels[n].ex;
  r.witnesses = levels[n].witnesses;
  r.examined = levels[n].examined;

  // best[k]: most edges on k vertices allowing disjoint unions; split[k] is
  // the first part size of an optimal split (0 = connected).
  std::vector<int> best(n + 1, -1), split(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    best[k] = levels[k].ex;
    for (int j = 1; j < k; ++j)
      if (best[j] >= 0 && best[k - j] >= 0 && best[j] + best[k - j] > best[k]) {
        best[k] = best[j] + best[k - j];
        split[k] = j;
      }
  }
  if (best[n] > r.ex) {
    std::vector<Graph> parts;
    std::vector<int> todo{n};
    while (!todo.empty()) {
      int k = todo.back();
      todo.pop_back();
      if (split[k] == 0) {
        parts.push_back(parse_graph6(levels[k].witnesses.front()));
      } else {
        todo.push_back(k - split[k]);
        todo.push_back(split[k]);
      }
    }
    r.ex = best[n];
    r.disconnected = true;
    r.witnesses = {canonical_g6(disjoint_union(parts))};
  }
  return r;
}

SearchReport max_edges(int n, const FamilySpec& fam, const SearchLimits& limits) {
  check_range(n, limits);
  auto t0 = std::chrono::steady_clock::now();
  auto r = finish_report(n, fam, search_levels(n, fam));
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

int naive_max_edges(int n, const FamilySpec& fam) {
  if (n < 1 || n > 8) throw std::invalid_argument("naive search supports 1..8 vertices");
  std::map<CanonicalCode, Graph> level{{canonical_form(Graph(n)), Graph(n)}};
  int best = -1;
  for (int m = 0; !level.empty(); ++m) {
    for (const auto& [code, g] : level) {
      if (!is_planar(g)) continue;
      bool free = true;
      for (const auto& p : fam.patterns) free = free && !contains_subgraph(g, p);
      if (free) best = std::max(best, m);
    }
    std::map<CanonicalCode, Graph> next;
    for (const auto& [code, g] : level)
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          auto lab = canonical_labeling(h);
          next.try_emplace(lab.code, h.relabeled(lab.label));
        }
    level = std::move(next);
  }
  return best;
}

long long turan_bound(int n) { return 25LL * (n - 2) / 11; }

BoundRow bound_row(const SearchReport& r) {
  BoundRow row;
  row.n = r.n;
  row.ex = r.ex;
  row.bound = turan_bound(r.n);
  row.slack = row.bound - row.ex;
  row.flagged = row.slack < 0;
  row.disconnected = r.disconnected;
  row.examined = r.examined;
  row.witnesses = r.witnesses;
  return row;
}

std::vector<BoundRow> bound_table(int lo, int hi, const FamilySpec& fam, const SearchLimits& limits,
                                  const LevelSearch& search) {
  if (lo < 3 || hi < lo) throw std::invalid_argument("bad n range");
  std::vector<BoundRow> rows;
  const int top = std::min(hi, limits.cap());
  for (int n = std::max(lo, top + 1); n <= hi; ++n)
    if (fam.name != "K4+Theta5" || n < 24 || (n - 24) % 88 != 0 || (n - 24) / 88 > 3)
      throw BoundExceeded("n = " + std::to_string(n) + " exceeds the exhaustive bound " +
                          std::to_string(limits.cap()));
  std::vector<LevelResult> levels;
  if (lo <= top) levels = search ? search(top, fam) : search_levels(top, fam);
  for (int n = lo; n <= hi; ++n) {
    if (n <= top) {
      rows.push_back(bound_row(finish_report(n, fam, levels)));
      continue;
    }
    const int k = (n - 24) / 88;
    auto pg = build_witness(k);
    auto report = verify_witness(pg, WitnessSpec{k});
    if (!report.pass()) throw std::runtime_error("constructed witness failed verification");
    BoundRow row;
    row.n = n;
    row.ex = pg.graph().size();
    row.bound = turan_bound(n);
    row.slack = row.bound - row.ex;
    row.flagged = row.slack < 0;
    row.witness_only = true;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ptl
