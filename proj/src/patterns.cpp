#include "patterns.hpp"

#include <algorithm>
#include <stdexcept>

#include "canon.hpp"

namespace ptl {

namespace {

bool is_theta5(const Graph& p) {
  if (p.order() != 5 || p.size() != 6) return false;
  Graph ref(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  return canonical_form(p) == canonical_form(ref);
}

}  // namespace

Pattern make_pattern(std::string name, Graph g) {
  if (g.order() < 3 || g.order() > 8) throw std::invalid_argument("pattern must have 3..8 vertices");
  if (!g.is_connected()) throw std::invalid_argument("pattern must be connected");
  const bool theta5 = is_theta5(g);
  return {std::move(name), std::move(g), theta5};
}

Pattern complete_pattern(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  return make_pattern("K" + std::to_string(k), std::move(g));
}

Pattern cycle_pattern(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return make_pattern("C" + std::to_string(k), std::move(g));
}

std::vector<Pattern> theta_patterns(int k) {
  if (k < 4) throw std::invalid_argument("theta graphs need at least 4 vertices");
  std::vector<std::pair<CanonicalCode, Graph>> classes;
  for (int j = 2; j < k - 1; ++j) {
    Graph g = cycle_pattern(k).graph;
    g.add_edge(0, j);
    auto code = canonical_form(g);
    if (std::none_of(classes.begin(), classes.end(), [&](const auto& c) { return c.first == code; }))
      classes.emplace_back(code, std::move(g));
  }
  std::vector<Pattern> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::string name = "Theta" + std::to_string(k);
    if (classes.size() > 1) name += "." + std::to_string(i);
    out.push_back(make_pattern(std::move(name), std::move(classes[i].second)));
  }
  return out;
}

std::vector<std::string> family_preset_names() {
  return {"K4", "Theta4", "Theta5", "Theta6", "C4", "C5", "C6", "K4+Theta5"};
}

FamilySpec family_preset(std::string_view name) {
  FamilySpec fam{std::string(name), {}};
  if (name == "K4") {
    fam.patterns.push_back(complete_pattern(4));
  } else if (name == "Theta4" || name == "Theta5" || name == "Theta6") {
    fam.patterns = theta_patterns(name.back() - '0');
  } else if (name == "C4" || name == "C5" || name == "C6") {
    fam.patterns.push_back(cycle_pattern(name.back() - '0'));
  } else if (name == "K4+Theta5") {
    fam.patterns.push_back(complete_pattern(4));
    fam.patterns.push_back(theta_patterns(5).front());
  } else {
    throw std::invalid_argument("unknown family preset '" + std::string(name) + "'");
  }
  return fam;
}

namespace {

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& p) : g_(g), p_(p), map_(p.order(), -1), used_(g.order(), 0) {
    gdeg_.resize(g.order());
    for (int v = 0; v < g.order(); ++v) gdeg_[v] = g.degree(v);
    pdeg_.resize(p.order());
    for (int v = 0; v < p.order(); ++v) pdeg_[v] = p.degree(v);
  }

  // first < 0: free choice of the first pattern vertex.
  bool run(int first, int host) {
    const int k = p_.order();
    if (k > g_.order()) return false;
    if (first >= 0) {
      plan(first);
      if (gdeg_[host] < pdeg_[first]) return false;
      map_[first] = host;
      used_[host] = 1;
      bool ok = extend(1);
      used_[host] = 0;
      map_[first] = -1;
      return ok;
    }
    int start = 0;
    for (int v = 1; v < k; ++v)
      if (pdeg_[v] > pdeg_[start]) start = v;
    plan(start);
    return extend(0);
  }

  const Occurrence& occurrence() const { return map_; }

 private:
  // Match order: each next vertex has the most already-ordered neighbors.
  void plan(int start) {
    const int k = p_.order();
    order_ = {start};
    anchor_.assign(k, -1);
    std::vector<char> in(k, 0);
    in[start] = 1;
    while (static_cast<int>(order_.size()) < k) {
      int best = -1, best_links = -1;
      for (int v = 0; v < k; ++v) {
        if (in[v]) continue;
        int links = 0;
        for (int u : order_) links += p_.has_edge(u, v);
        if (links > best_links || (links == best_links && pdeg_[v] > pdeg_[best])) {
          best = v;
          best_links = links;
        }
      }
      for (int u : order_)
        if (p_.has_edge(u, best)) {
          anchor_[best] = u;
          break;
        }
      in[best] = 1;
      order_.push_back(best);
    }
  }

  bool feasible(int pv, int hv) const {
    if (used_[hv] || gdeg_[hv] < pdeg_[pv]) return false;
    for (int u : order_) {
      if (map_[u] < 0) break;
      if (p_.has_edge(u, pv) && !g_.has_edge(map_[u], hv)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int pv = order_[depth];
    if (map_[pv] >= 0) return extend(depth + 1);
    auto try_host = [&](int hv) {
      if (!feasible(pv, hv)) return false;
      map_[pv] = hv;
      used_[hv] = 1;
      if (extend(depth + 1)) return true;
      used_[hv] = 0;
      map_[pv] = -1;
      return false;
    };
    if (anchor_[pv] >= 0) {
      for (int hv : g_.neighbors(map_[anchor_[pv]]))
        if (try_host(hv)) return true;
    } else {
      for (int hv = 0; hv < g_.order(); ++hv)
        if (try_host(hv)) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& p_;
  std::vector<int> gdeg_, pdeg_, order_, anchor_;
  Occurrence map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<Occurrence> contains_subgraph(const Graph& g, const Pattern& p) {
  Matcher m(g, p.graph);
  if (m.run(-1, -1)) return m.occurrence();
  return std::nullopt;
}

std::optional<Occurrence> contains_subgraph_through(const Graph& g, const Pattern& p, int v) {
  Matcher m(g, p.graph);
  for (int q = 0; q < p.graph.order(); ++q)
    if (m.run(q, v)) return m.occurrence();
  return std::nullopt;
}

std::optional<Occurrence> find_theta5(const Graph& g, int through) {
  const int n = g.order();
  int cyc[5];
  auto chord = [&]() -> std::optional<Occurrence> {
    for (int i = 0; i < 5; ++i)
      if (g.has_edge(cyc[i], cyc[(i + 2) % 5])) {
        Occurrence occ(5);
        for (int j = 0; j < 5; ++j) occ[j] = cyc[(i + j) % 5];
        return occ;
      }
    return std::nullopt;
  };
  for (int a = 0; a < n; ++a) {
    if (through >= 0 && a != through) continue;
    // Without a required vertex, a is the smallest vertex on the cycle.
    const int floor = through >= 0 ? -1 : a;
    cyc[0] = a;
    for (int b : g.neighbors(a)) {
      if (b <= floor) continue;
      cyc[1] = b;
      for (int c : g.neighbors(b)) {
        if (c <= floor || c == a) continue;
        cyc[2] = c;
        for (int d : g.neighbors(c)) {
          if (d <= floor || d == a || d == b) continue;
          cyc[3] = d;
          for (int e : g.neighbors(d)) {
            if (e <= floor || e == a || e == b || e == c || !g.has_edge(e, a)) continue;
            cyc[4] = e;
            if (auto occ = chord()) return occ;
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool occurrence_valid(const Graph& g, const Pattern& p, const Occurrence& occ) {
  if (static_cast<int>(occ.size()) != p.graph.order()) return false;
  auto sorted = occ;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int x : occ)
    if (x < 0 || x >= g.order()) return false;
  for (auto [u, v] : p.graph.edges())
    if (!g.has_edge(occ[u], occ[v])) return false;
  return true;
}

FreenessResult is_family_free(const Graph& g, const FamilySpec& fam) {
  for (const auto& p : fam.patterns) {
    auto occ = p.theta5 ? find_theta5(g) : contains_subgraph(g, p);
    if (occ) return {false, p.name, *occ};
  }
  return {};
}

FreenessResult is_family_free_through(const Graph& g, const FamilySpec& fam, int v) {
  for (const auto& p : fam.patterns) {
    auto occ = p.theta5 ? find_theta5(g, v) : contains_subgraph_through(g, p, v);
    if (occ) return {false, p.name, *occ};
  }
  return {};
}

}  // namespace ptl
