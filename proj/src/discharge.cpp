#include "discharge.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace ptl {

Rational edge_contribution(const PlaneGraph& pg, int u, int v) {
  auto [l1, l2] = pg.faces_of_edge(u, v);
  return Rational(1, l1) + Rational(1, l2);
}

Rational block_contribution(const PlaneGraph& pg, const TriangularBlock& b) {
  Rational f;
  for (auto [u, v] : b.edges) f += edge_contribution(pg, u, v);
  return f;
}

Rational block_certificate(const PlaneGraph& pg, const TriangularBlock& b) {
  return Rational(25) * block_contribution(pg, b) - Rational(14 * static_cast<std::int64_t>(b.edges.size()));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Precondition: return "PRECONDITION";
    case Verdict::Report: return "REPORT";
  }
  return "?";
}

DischargeLedger build_ledger(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  DischargeLedger L;
  L.vertex_count = g.order();
  L.edge_count = g.size();
  L.face_count = pg.face_count();

  auto dec = decompose(pg);
  std::vector<Rational> face_share(pg.face_count());
  for (auto [u, v] : g.edges()) {
    EdgeRow row;
    row.edge = {u, v};
    const int f1 = pg.face_of(u, v), f2 = pg.face_of(v, u);
    row.len1 = pg.face_length(f1);
    row.len2 = pg.face_length(f2);
    row.f = Rational(1, row.len1) + Rational(1, row.len2);
    row.block = dec.block_of_edge.at({u, v});
    face_share[f1] += Rational(1, row.len1);
    face_share[f2] += Rational(1, row.len2);
    L.f_total += row.f;
    L.edges.push_back(row);
  }
  L.c_total = Rational(25) * L.f_total - Rational(14 * static_cast<std::int64_t>(g.size()));

  int edge_sum = 0;
  Rational f_sum, c_sum;
  for (const auto& b : dec.blocks) {
    BlockRow row;
    row.cls = b.cls;
    row.signature = b.signature;
    row.vertices = b.vertices;
    row.edges = static_cast<int>(b.edges.size());
    row.f = block_contribution(pg, b);
    row.certificate = Rational(25) * row.f - Rational(14 * static_cast<std::int64_t>(row.edges));
    edge_sum += row.edges;
    f_sum += row.f;
    c_sum += row.certificate;
    L.blocks.push_back(std::move(row));
  }

  L.edges_partitioned = edge_sum == g.size();
  // The lone face of a single vertex has no boundary edge and receives nothing.
  int bounded_by_edges = 0;
  L.faces_normalized = true;
  for (int f = 0; f < pg.face_count(); ++f) {
    if (pg.face_length(f) == 0) continue;
    ++bounded_by_edges;
    L.faces_normalized = L.faces_normalized && face_share[f] == Rational(1);
  }
  L.faces_partitioned = f_sum == L.f_total && L.f_total == Rational(bounded_by_edges);
  L.certificates_add_up = c_sum == L.c_total;
  L.euler = g.order() - g.size() + pg.face_count() == 2;
  return L;
}

CertificateResult certificate_check(const PlaneGraph& pg) {
  CertificateResult r;
  r.ledger = build_ledger(pg);
  const Graph& g = pg.graph();

  r.freeness = is_family_free(g, family_preset("K4+Theta5"));
  if (!r.freeness.free) {
    std::string occ;
    for (std::size_t i = 0; i < r.freeness.occurrence.size(); ++i)
      occ += (i ? "," : "") + std::to_string(r.freeness.occurrence[i]);
    r.violations.push_back("not {K4,Theta5}-free: contains " + r.freeness.pattern + " on vertices " + occ);
  }
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < 3) {
      r.low_degree_vertex = v;
      r.violations.push_back("minimum degree below 3: vertex " + std::to_string(v) + " has degree " +
                             std::to_string(g.degree(v)));
      break;
    }

  bool signs = r.ledger.c_total <= Rational(0);
  for (const auto& b : r.ledger.blocks) signs = signs && b.certificate <= Rational(0);
  if (!r.violations.empty())
    r.verdict = Verdict::Precondition;
  else
    r.verdict = signs && r.ledger.identities_hold() ? Verdict::Pass : Verdict::Fail;
  return r;
}

ReductionTrace reduce_min_degree(const Graph& g, const std::vector<int>& priority) {
  const int n = g.order();
  if (static_cast<int>(priority.size()) != n) throw std::invalid_argument("priority must list every vertex once");
  std::vector<int> rank(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = priority[i];
    if (v < 0 || v >= n || rank[v] >= 0) throw std::invalid_argument("priority must list every vertex once");
    rank[v] = i;
  }

  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  using Item = std::pair<int, int>;  // (rank, vertex)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 2) ready.push({rank[v], v});
  }

  ReductionTrace t;
  while (!ready.empty()) {
    const int v = ready.top().second;
    ready.pop();
    if (gone[v]) continue;
    gone[v] = 1;
    t.steps.push_back({v, deg[v]});
    for (int w : g.neighbors(v)) {
      if (gone[w]) continue;
      if (--deg[w] == 2) ready.push({rank[w], w});
    }
  }
  for (int v = 0; v < n; ++v)
    if (!gone[v]) t.survivors.push_back(v);
  t.core = g.induced(t.survivors);
  return t;
}

ReductionTrace reduce_min_degree(const Graph& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  return reduce_min_degree(g, order);
}

long long size_class_constant(int size_class) {
  switch (size_class) {
    case 2: return 14;
    case 3: return 17;
    case 4: return 20;
    case 5: return 25;
  }
  throw std::invalid_argument("size class must be 2..5");
}

BlockCountBound bound_chain(const Graph& g) {
  BlockCountBound r;
  r.n = g.order();
  r.e = g.size();
  r.value = 25LL * r.n - 11LL * r.e;

  if (!is_family_free(g, family_preset("K4+Theta5")).free) r.violations.push_back("not {K4,Theta5}-free");
  bool planar = true;
  for (const auto& comp : g.components()) planar = planar && is_planar(g.induced(comp));
  if (!planar) r.violations.push_back("not planar");

  r.trace = reduce_min_degree(g);
  const Graph& core = r.trace.core;
  const int n1 = core.order();
  r.core_empty = n1 == 0;
  r.empty_branch = r.n + 37LL;
  r.core_value = 25LL * n1 - 11LL * core.size();
  r.reduction_link = r.value >= r.core_value + (r.n - n1);

  if (r.core_empty) {
    r.block_constants = true;
    r.core_link = true;
    r.lower_bound = 0;
    r.chain_link = r.value >= r.empty_branch;
  } else {
    r.block_constants = true;
    for (const auto& edges : biconnected_components(core)) {
      std::set<int> vs;
      for (auto [u, v] : edges) {
        vs.insert(u);
        vs.insert(v);
      }
      CoreBlock b;
      b.vertices = static_cast<int>(vs.size());
      b.edges = static_cast<int>(edges.size());
      b.size_class = std::min(b.vertices, 5);
      b.value = 25LL * b.vertices - 11LL * b.edges - 25;
      b.constant = size_class_constant(b.size_class);
      r.block_constants = r.block_constants && b.value >= b.constant;
      switch (b.size_class) {
        case 2: ++r.b2; break;
        case 3: ++r.b3; break;
        case 4: ++r.b4; break;
        default: ++r.b5; break;
      }
      r.blocks.push_back(b);
    }
    r.lower_bound = 25LL * r.b5 + 20LL * r.b4 + 17LL * r.b3 + 14LL * r.b2 + 25;
    r.core_link = r.core_value >= r.lower_bound;
    r.chain_link = r.value >= r.lower_bound + (r.n - n1);
    if (r.b5 == 0 && r.value < 25LL + r.n) r.chain_link = false;
  }

  if (!r.violations.empty())
    r.verdict = Verdict::Precondition;
  else if (r.n >= 25)
    r.verdict = r.value >= 50 ? Verdict::Pass : Verdict::Fail;
  return r;
}

}  // namespace ptl
