#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"

#include "construct.hpp"
#include "discharge.hpp"
#include "search.hpp"

using namespace ptl;
using namespace testing;

namespace {

PlaneGraph embed(const Graph& g) { return std::get<PlaneGraph>(test_planarity(g)); }

void outer_longest(PlaneGraph& pg) {
  int best = 0;
  for (int f = 1; f < pg.face_count(); ++f)
    if (pg.face_length(f) > pg.face_length(best)) best = f;
  pg.set_outer(best);
}

std::string golden_text(int k) {
  std::ifstream in(std::string(PTL_DATA_DIR) + "/witness_k" + std::to_string(k) + ".emb");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Square 0-1-2-3 with roof 4 over 2-3.
Graph house() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}, {3, 4}}); }

// Triangle 0-1-2 with a three-vertex path hung off every side, so each side
// borders a pentagon.
Graph triangle_in_pentagons() {
  Graph g(12, {{0, 1}, {1, 2}, {2, 0}});
  int next = 3;
  for (auto [x, y] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}) {
    g.add_edge(x, next);
    g.add_edge(next, next + 1);
    g.add_edge(next + 1, next + 2);
    g.add_edge(next + 2, y);
    next += 3;
  }
  return g;
}

}  // namespace

TEST_SUITE("discharge") {

TEST_CASE("edge contributions") {
  auto h = embed(house());
  outer_longest(h);
  CHECK(edge_contribution(h, 2, 4) == Rational(8, 15));
  CHECK(edge_contribution(h, 0, 1) == Rational(9, 20));
  CHECK(edge_contribution(h, 2, 3) == Rational(7, 12));

  auto c4 = embed(cycle(4));
  CHECK(edge_contribution(c4, 0, 1) == Rational(1, 2));

  auto p4 = embed(path(4));
  CHECK(edge_contribution(p4, 1, 2) == Rational(1, 3));
}

TEST_CASE("block values") {
  auto c4 = embed(cycle(4));
  auto b2 = block_of(c4, 0, 1);
  CHECK(block_contribution(c4, b2) == Rational(1, 2));
  CHECK(block_certificate(c4, b2) == Rational(-3, 2));

  // Pick the embedding with every hanging path outside the triangle.
  std::optional<PlaneGraph> found;
  for_each_embedding(triangle_in_pentagons(), [&](const PlaneGraph& pg) {
    if (!found && pg.face_length(pg.outer()) == 12) found = pg;
  });
  REQUIRE(found);
  auto t = *found;
  REQUIRE(t.face_length(t.outer()) == 12);
  auto tri = block_of(t, 0, 1);
  REQUIRE(tri.cls == BlockClass::B3);
  CHECK(block_contribution(t, tri) == Rational(8, 5));
  CHECK(block_certificate(t, tri) == Rational(-2));

  auto g0 = parse_embedding(golden_text(0));
  for (const auto& row : build_ledger(g0).blocks) {
    CHECK(row.cls == BlockClass::B4Diamond);
    CHECK(row.f == Rational(14, 5));
    CHECK(row.certificate == Rational(0));
  }
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3).str() == "-1/3");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("-7/14") == Rational(-1, 2));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), std::overflow_error);
}

TEST_CASE("ledger of the witness graph passes") {
  auto g0 = parse_embedding(golden_text(0));
  auto r = certificate_check(g0);
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.ledger.c_total == Rational(0));
  CHECK(r.ledger.f_total == Rational(r.ledger.face_count));
  CHECK(r.ledger.identities_hold());
  CHECK(r.violations.empty());
  CHECK(to_string(r.verdict) == "PASS");
}

TEST_CASE("icosahedron is a precondition failure") {
  auto r = certificate_check(embed(icosahedron()));
  CHECK(r.verdict == Verdict::Precondition);
  CHECK_FALSE(r.freeness.free);
  CHECK_FALSE(r.violations.empty());
  CHECK(r.ledger.identities_hold());
}

TEST_CASE("low degree is a precondition failure") {
  auto r = certificate_check(embed(cycle(5)));
  CHECK(r.verdict == Verdict::Precondition);
  CHECK(r.low_degree_vertex == 0);
}

TEST_CASE("identities hold for every embedding of small planar graphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng, 2 + trial % 8, 0.45);
    if (!g.is_connected() || !is_planar(g)) continue;
    for_each_embedding(g, [&](const PlaneGraph& pg) {
      auto L = build_ledger(pg);
      REQUIRE(L.identities_hold());
      Rational sum;
      for (const auto& b : L.blocks) sum += b.certificate;
      REQUIRE(sum == L.c_total);
      REQUIRE(L.c_total == Rational(25) * L.f_total - Rational(14 * L.edge_count));
    });
  }
  CHECK(build_ledger(embed(Graph(1))).identities_hold());
}

TEST_CASE("reduction examples") {
  auto c5 = reduce_min_degree(cycle(5));
  std::vector<std::pair<int, int>> steps;
  for (auto s : c5.steps) steps.push_back({s.vertex, s.degree});
  CHECK(steps == std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {2, 1}, {3, 1}, {4, 0}});
  CHECK(c5.removed_edges() == 5);
  CHECK(c5.survivors.empty());

  auto k4 = reduce_min_degree(complete(4));
  CHECK(k4.steps.empty());
  CHECK(k4.core == complete(4));

  auto d = reduce_min_degree(diamond());
  steps.clear();
  for (auto s : d.steps) steps.push_back({s.vertex, s.degree});
  CHECK(steps == std::vector<std::pair<int, int>>{{2, 2}, {0, 2}, {1, 1}, {3, 0}});

  auto custom = reduce_min_degree(cycle(5), {4, 3, 2, 1, 0});
  CHECK(custom.steps.front().vertex == 4);
  CHECK(custom.removed_edges() == 5);
}

TEST_CASE("reduction reaches the 3-core under any order") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 10;
    Graph g = random_graph(rng, n, 0.35);
    auto t = reduce_min_degree(g, random_perm(rng, n));
    CHECK(t.survivors == core_by_rounds(g));
    for (auto s : t.steps) CHECK(s.degree <= 2);
    CHECK(g.size() - t.removed_edges() == t.core.size());
  }
}

TEST_CASE("bound chain values") {
  auto g0 = parse_embedding(golden_text(0)).graph();
  auto b = bound_chain(g0);
  CHECK(b.value == 50);
  CHECK(b.verdict == Verdict::Report);
  CHECK(b.b5 == 1);
  CHECK(b.lower_bound == 50);
  CHECK(b.chain_link);

  auto k2 = bound_chain(path(2));
  CHECK(k2.value == 39);
  CHECK(k2.core_empty);
  CHECK(k2.empty_branch == 39);
  CHECK(k2.chain_link);

  auto bk = bound_chain(book3());
  CHECK(bk.value == 48);

  CHECK(size_class_constant(2) == 14);
  CHECK(size_class_constant(3) == 17);
  CHECK(size_class_constant(4) == 20);
  CHECK(size_class_constant(5) == 25);
}

TEST_CASE("bound chain on joined witness copies") {
  // Two witness copies joined by a bridge: the core is everything and splits
  // into two big blocks plus the bridge.
  auto g0 = parse_embedding(golden_text(0)).graph();
  const int n0 = g0.order();
  Graph g(2 * n0);
  for (auto [u, v] : g0.edges()) {
    g.add_edge(u, v);
    g.add_edge(u + n0, v + n0);
  }
  g.add_edge(0, n0);
  auto b = bound_chain(g);
  CHECK(b.b5 == 2);
  CHECK(b.b2 == 1);
  CHECK(b.verdict == Verdict::Pass);
  CHECK(b.chain_link);
  CHECK(b.core_link);
}

TEST_CASE("bound chain flags forbidden input") {
  auto b = bound_chain(complete(4));
  CHECK_FALSE(b.violations.empty());
}

}  // TEST_SUITE

TEST_SUITE("search") {

TEST_CASE("maximum edge counts for small n") {
  auto fam = family_preset("K4+Theta5");
  const std::vector<int> expect{3, 5, 7, 9, 11};
  for (int n = 3; n <= 7; ++n) CHECK(max_edges(n, fam).ex == expect[n - 3]);
}

TEST_CASE("exhaustive and naive searches agree") {
  for (const char* name : {"K4+Theta5", "K4", "Theta4", "C4", "C5"}) {
    auto fam = family_preset(name);
    for (int n = 3; n <= 7; ++n) CHECK(max_edges(n, fam).ex == naive_max_edges(n, fam));
  }
}

TEST_CASE("other families") {
  CHECK(max_edges(4, family_preset("K4")).ex == 5);
  CHECK(max_edges(4, family_preset("Theta4")).ex == 4);
}

TEST_CASE("witnesses are planar, family-free and extremal") {
  auto fam = family_preset("K4+Theta5");
  for (int n = 3; n <= 8; ++n) {
    auto r = max_edges(n, fam);
    CHECK_FALSE(r.witnesses.empty());
    for (const auto& w : r.witnesses) {
      Graph g = parse_graph6(w);
      CHECK(g.order() == n);
      CHECK(g.size() == r.ex);
      CHECK(is_family_free(g, fam).free);
      for (const auto& comp : g.components()) CHECK(is_planar(g.induced(comp)));
    }
  }
}

TEST_CASE("ex is nondecreasing in n") {
  auto fam = family_preset("K4+Theta5");
  int prev = 0;
  for (int n = 3; n <= 8; ++n) {
    int ex = max_edges(n, fam).ex;
    CHECK(ex >= prev);
    prev = ex;
  }
}

TEST_CASE("partitioned searches merge to the single-worker result") {
  auto fam = family_preset("K4+Theta5");
  auto whole = search_levels(8, fam);
  for (int workers : {2, 3}) {
    std::vector<std::vector<LevelResult>> parts;
    for (int i = 0; i < workers; ++i) parts.push_back(search_levels(8, fam, Partition{i, workers}));
    auto merged = merge_levels(parts);
    REQUIRE(merged.size() == whole.size());
    for (std::size_t i = 0; i < whole.size(); ++i) {
      CHECK(merged[i].ex == whole[i].ex);
      CHECK(merged[i].witnesses == whole[i].witnesses);
      CHECK(merged[i].examined == whole[i].examined);
    }
  }
}

TEST_CASE("bound table rows") {
  auto rows = bound_table(3, 6, family_preset("K4+Theta5"));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].bound == 2);
  CHECK(rows[0].slack == -1);
  CHECK(rows[0].flagged);
  CHECK(rows[2].flagged);
  CHECK_FALSE(rows[3].flagged);
  CHECK(turan_bound(24) == 50);

  auto w = bound_table(24, 24, family_preset("K4+Theta5"));
  REQUIRE(w.size() == 1);
  CHECK(w[0].witness_only);
  CHECK(w[0].ex == 50);
  CHECK(w[0].slack == 0);
}

TEST_CASE("bounds are enforced") {
  auto fam = family_preset("K4+Theta5");
  CHECK_THROWS_AS(max_edges(11, fam), BoundExceeded);
  CHECK_THROWS_AS(max_edges(2, fam), std::invalid_argument);
  CHECK_THROWS_AS(bound_table(3, 24, fam), BoundExceeded);
  CHECK_THROWS_AS(bound_table(24, 24, family_preset("K4")), BoundExceeded);
  CHECK_THROWS_AS(naive_max_edges(9, fam), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("construct") {

TEST_CASE("witnesses verify for k = 0, 1, 2") {
  for (int k = 0; k <= 2; ++k) {
    auto pg = build_witness(k);
    auto r = verify_witness(pg, WitnessSpec{k});
    CHECK(r.pass());
    CHECK(r.n == 88 * k + 24);
    CHECK(r.e == 200 * k + 50);
    CHECK(11 * r.e == 25 * (r.n - 2));
    CHECK(r.e == 5 * r.diamonds);
    CHECK(5 * r.pentagons == 4 * r.diamonds);
    CHECK(r.triangles == 2 * r.diamonds);
    CHECK(r.f == r.triangles + r.pentagons);
    CHECK(pg.face_length(pg.outer()) == 5);
  }
}

TEST_CASE("golden files match the builder") {
  for (int k = 0; k <= 2; ++k) CHECK(write_embedding(build_witness(k)) == golden_text(k));
}

TEST_CASE("verification rejects other graphs") {
  auto r = verify_witness(embed(icosahedron()), WitnessSpec{0});
  CHECK_FALSE(r.pass());

  auto base = build_witness(0);
  const auto& face = base.faces()[base.outer()];
  Graph g = base.graph();
  g.add_edge(face[0], face[2]);
  auto bad = verify_witness(embed(g), WitnessSpec{0});
  CHECK_FALSE(bad.pass());
  bool edge_count_failed = false;
  for (const auto& c : bad.checks)
    if (c.name == "edge-count") edge_count_failed = !c.pass;
  CHECK(edge_count_failed);

  CHECK_FALSE(verify_witness(base, WitnessSpec{1}).pass());
}

TEST_CASE("builder argument checks") {
  CHECK_THROWS_AS(build_witness(-1), std::invalid_argument);
  CHECK_THROWS_AS(build_witness(4), std::invalid_argument);
}

}  // TEST_SUITE
