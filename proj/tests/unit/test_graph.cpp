#include "doctest.h"
#include "helpers.hpp"

#include "canon.hpp"
#include "enumerate.hpp"

using namespace ptl;
using namespace testing;

TEST_SUITE("graph") {

TEST_CASE("graph basics") {
  Graph g = diamond();
  CHECK(g.order() == 4);
  CHECK(g.size() == 5);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(2) == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(2, 3));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(g.min_degree() == 2);
  CHECK(g.is_connected());
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 7), std::out_of_range);

  int degree_sum = 0;
  for (int v = 0; v < g.order(); ++v) degree_sum += g.degree(v);
  CHECK(degree_sum == 2 * g.size());
}

TEST_CASE("components, induced subgraphs and relabeling") {
  Graph g(5, {{0, 1}, {3, 4}});
  CHECK_FALSE(g.is_connected());
  CHECK(g.components() == std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}});

  Graph h = cycle(5).induced({0, 1, 2});
  CHECK(h.order() == 3);
  CHECK(h.size() == 2);

  Graph r = path(3).relabeled({2, 0, 1});  // 0-1-2 becomes 2-0-1
  CHECK(r.has_edge(2, 0));
  CHECK(r.has_edge(0, 1));
  CHECK_FALSE(r.has_edge(2, 1));

  Graph w = path(3).with_vertex({0, 2});
  CHECK(w == cycle(4));
}

TEST_CASE("graph6 parse examples") {
  Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);

  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));

  // 'D' = 5 vertices; '?' = 000000, '{' = 111100. Bits in column order
  // (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) (0,4) (1,4) (2,4) (3,4).
  Graph d = parse_graph6("D?{");
  CHECK(d.order() == 5);
  CHECK(d.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});

  CHECK(parse_graph6("C~") == complete(4));
  CHECK(parse_graph6(">>graph6<<A_\n") == k2);
}

TEST_CASE("graph6 write examples") {
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(path(2)) == "A_");
  CHECK(write_graph6(complete(4)) == "C~");
  CHECK(write_graph6(parse_graph6("D?{")) == "D?{");
}

TEST_CASE("graph6 errors carry byte offsets") {
  auto offset_of = [](std::string_view text) -> long {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("D?{x") == 3);      // trailing byte
  CHECK(offset_of("D?") == 2);        // truncated
  CHECK(offset_of("D? {") == 2);      // ' ' is below '?'
  CHECK(offset_of("~") == 1);         // long header cut short
  CHECK(offset_of("") == 0);
  CHECK_THROWS_AS(parse_graph6("D?\x7f"), ParseError);
}

TEST_CASE("graph6 long header round trip") {
  std::mt19937 rng(7);
  for (int n : {62, 63, 64, 70}) {
    Graph g = random_graph(rng, n, 0.1);
    auto text = write_graph6(g);
    CHECK((text[0] == '~') == (n >= 63));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 round trip over every enumerated graph up to 7 vertices") {
  long count = 0;
  enumerate_connected_levels(7, {}, [&](const Graph& g) {
    ++count;
    REQUIRE(parse_graph6(write_graph6(g)) == g);
  });
  CHECK(count == 1 + 1 + 2 + 6 + 21 + 112 + 853);
}

TEST_CASE("articulation points and biconnected components") {
  Graph g = bowtie();
  auto cut = articulation_points(g);
  CHECK(cut == std::vector<bool>{true, false, false, false, false});
  auto blocks = biconnected_components(g);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0] == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(blocks[1] == std::vector<Edge>{{0, 3}, {0, 4}, {3, 4}});

  auto tree = biconnected_components(path(4));
  CHECK(tree.size() == 3);
  CHECK(biconnected_components(cycle(6)).size() == 1);
  CHECK(biconnected_components(Graph(3)).empty());
}

TEST_CASE("biconnected components partition the edges of random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng, 3 + trial % 9, 0.3);
    auto blocks = biconnected_components(g);
    std::vector<Edge> all;
    for (const auto& b : blocks) {
      all.insert(all.end(), b.begin(), b.end());
      // A block with three or more edges has no cut vertex of its own.
      if (b.size() >= 3) {
        std::set<int> vs;
        for (auto [u, v] : b) vs.insert(u), vs.insert(v);
        Graph h = g.induced({vs.begin(), vs.end()});
        for (bool c : articulation_points(h)) CHECK_FALSE(c);
      }
    }
    std::sort(all.begin(), all.end());
    CHECK(all == g.edges());
  }
}

}  // TEST_SUITE

TEST_SUITE("canon") {

TEST_CASE("relabeled cycles share a code") {
  Graph a = cycle(5);
  Graph b(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(a) != canonical_form(path(5)));
}

TEST_CASE("all 5-vertex graphs give 34 codes") {
  std::set<CanonicalCode> codes;
  for (unsigned long long m = 0; m < 1024; ++m) codes.insert(canonical_form(from_mask(5, m)));
  CHECK(codes.size() == 34);
}

TEST_CASE("codes agree with brute-force canonical masks on 6 vertices") {
  std::map<CanonicalCode, unsigned long long> seen;
  std::set<unsigned long long> brute;
  for (unsigned long long m = 0; m < (1ULL << 15); m += 7) {
    Graph g = from_mask(6, m);
    auto b = brute_canonical(g);
    brute.insert(b);
    auto [it, fresh] = seen.emplace(canonical_form(g), b);
    if (!fresh) REQUIRE(it->second == b);
  }
  CHECK(seen.size() == brute.size());
}

TEST_CASE("canonical form is invariant under random relabeling") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 8;
    Graph g = random_graph(rng, n, 0.45);
    Graph h = g.relabeled(random_perm(rng, n));
    REQUIRE(canonical_form(g) == canonical_form(h));
    REQUIRE(canonical_graph(g) == canonical_graph(h));
  }
}

TEST_CASE("canonical labeling is a relabeling onto the canonical graph") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 9, 0.4);
    auto lab = canonical_labeling(g);
    CHECK(g.relabeled(lab.label) == canonical_graph(g));
  }
}

TEST_CASE("vertex colors separate otherwise isomorphic graphs") {
  Graph p = path(3);
  std::vector<int> end{1, 0, 0}, mid{0, 1, 0};
  CHECK(canonical_labeling(p, end).code != canonical_labeling(p, mid).code);
  std::vector<int> other_end{0, 0, 1};
  CHECK(canonical_labeling(p, end).code == canonical_labeling(p, other_end).code);
}

TEST_CASE("regular graphs with large automorphism groups") {
  // Petersen graph relabelings.
  Graph pet = parse_graph6("IheA@GUAo");
  REQUIRE(pet.size() == 15);
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) CHECK(canonical_form(pet) == canonical_form(pet.relabeled(random_perm(rng, 10))));
  // Two non-isomorphic 3-regular graphs on 6 vertices.
  Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(canonical_form(prism) != canonical_form(k33));
}

TEST_CASE("canonical labeling rejects large graphs") { CHECK_THROWS_AS(canonical_form(Graph(65)), std::invalid_argument); }

}  // TEST_SUITE

TEST_SUITE("enumerate") {

TEST_CASE("connected graph counts") {
  CHECK(enumerate_graphs(4).size() == 6);
  CHECK(enumerate_graphs(5).size() == 21);
  CHECK(enumerate_graphs(6).size() == 112);
  CHECK(enumerate_graphs(7).size() == 853);
  CHECK(enumerate_graphs(8).size() == 11117);
}

TEST_CASE("counts match orbit-marking brute force for n = 3..7") {
  for (int n = 3; n <= 7; ++n) {
    auto brute = orbit_count(n, [](const Graph& g) { return g.is_connected(); });
    CHECK(static_cast<long long>(enumerate_graphs(n).size()) == brute);
  }
}

TEST_CASE("pruner at most 2 edges on 3 vertices leaves the path") {
  auto out = enumerate_graphs(3, [](const Graph& g, int) { return g.size() > 2; });
  REQUIRE(out.size() == 1);
  CHECK(out[0].size() == 2);
}

TEST_CASE("no duplicates and all connected") {
  auto out = enumerate_graphs(7);
  std::set<CanonicalCode> codes;
  for (const auto& g : out) {
    CHECK(g.is_connected());
    codes.insert(canonical_form(g));
  }
  CHECK(codes.size() == out.size());
}

TEST_CASE("hereditary pruning equals filtering the full enumeration") {
  auto triangle_free = [](const Graph& g) {
    for (auto [u, v] : g.edges())
      for (int w = 0; w < g.order(); ++w)
        if (g.has_edge(u, w) && g.has_edge(v, w)) return false;
    return true;
  };
  for (int n = 3; n <= 8; ++n) {
    std::set<CanonicalCode> pruned, filtered;
    for (const auto& g : enumerate_graphs(n, [&](const Graph& g, int) { return !triangle_free(g); }))
      pruned.insert(canonical_form(g));
    for (const auto& g : enumerate_graphs(n))
      if (triangle_free(g)) filtered.insert(canonical_form(g));
    CHECK(pruned == filtered);
  }
}

TEST_CASE("partitions cover the tree exactly once") {
  for (int workers : {2, 3, 5}) {
    std::vector<CanonicalCode> all;
    for (int i = 0; i < workers; ++i)
      for (const auto& g : enumerate_graphs(8, {}, Partition{i, workers})) all.push_back(canonical_form(g));
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(all.size() == 11117);
  }
  // Small levels are reported by worker 0 only.
  CHECK(enumerate_graphs(4, {}, Partition{1, 2}).empty());
  CHECK(enumerate_graphs(4, {}, Partition{0, 2}).size() == 6);
}

TEST_CASE("enumeration argument checks") {
  CHECK_THROWS_AS(enumerate_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(31), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_graphs(5, {}, Partition{2, 2}), std::invalid_argument);
}

}  // TEST_SUITE
