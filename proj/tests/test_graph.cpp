#include <doctest.h>

#include "mincut/graph.hpp"
#include "mincut/oracles.hpp"
#include "test_support.hpp"

using namespace mincut;

namespace {

WeightedGraph triangle() {
  std::vector<std::tuple<VertexId, VertexId, Weight>> e{{0, 1, 1}, {1, 2, 2}, {2, 0, 3}};
  return WeightedGraph::from_triples(3, e);
}

}  // namespace

TEST_CASE("ternarize star replaces centre with a cycle") {
  std::vector<std::tuple<VertexId, VertexId, Weight>> e{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}};
  auto g = WeightedGraph::from_triples(5, e);
  auto t = ternarize(g);
  CHECK(t.graph.num_vertices() == 8);
  CHECK(t.graph.num_edges() == 8);
  CHECK(t.sentinel == 5);
  CHECK(t.expansion[0].size() == 4);
  for (VertexId v = 0; v < 8; ++v) CHECK(t.graph.degree(v) <= 3);
}

TEST_CASE("ternarize leaves low-degree graphs alone") {
  std::vector<std::tuple<VertexId, VertexId, Weight>> e{{0, 1, 2}, {1, 2, 3}};
  auto g = WeightedGraph::from_triples(3, e);
  auto t = ternarize(g);
  CHECK(t.graph.edges() == g.edges());
  CHECK(t.owner == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("ternarize keeps the min cut of K5 and random graphs") {
  std::vector<std::tuple<VertexId, VertexId, Weight>> e;
  for (VertexId a = 0; a < 5; ++a)
    for (VertexId b = a + 1; b < 5; ++b) e.emplace_back(a, b, 1);
  auto k5 = WeightedGraph::from_triples(5, e);
  CHECK(stoer_wagner(ternarize(k5).graph).first == 4);
  Rng rng(4);
  for (int it = 0; it < 30; ++it) {
    auto g = testing::random_graph(2 + rng.below(10), 30, rng);
    CHECK(stoer_wagner(ternarize(g).graph).first == stoer_wagner(g).first);
  }
  std::vector<std::tuple<VertexId, VertexId, Weight>> two{{0, 1, 1}, {2, 3, 1}};
  CHECK_THROWS_AS(ternarize(WeightedGraph::from_triples(4, two)), Error);
}

TEST_CASE("contract") {
  auto g = triangle();
  std::vector<std::uint32_t> lab{0, 0, 1};
  auto c = contract(g, lab);
  CHECK(c.graph.num_vertices() == 2);
  CHECK(c.graph.num_edges() == 2);
  std::vector<std::uint32_t> id{0, 1, 2};
  CHECK(contract(g, id).graph.edges() == g.edges());

  Rng rng(9);
  for (int it = 0; it < 20; ++it) {
    auto h = testing::random_graph(12, 40, rng);
    std::vector<std::uint32_t> labels(12);
    for (auto& l : labels) l = rng.below(4);
    auto ch = contract(h, labels);
    std::vector<std::uint8_t> s(ch.graph.num_vertices());
    for (int trial = 0; trial < 10; ++trial) {
      for (auto& x : s) x = rng.next_bit();
      std::vector<std::uint8_t> pre(12);
      for (VertexId v = 0; v < 12; ++v) pre[v] = s[ch.map[v]];
      bool trivial = std::count(s.begin(), s.end(), 1) == 0 ||
                     std::count(s.begin(), s.end(), 0) == 0;
      if (trivial) continue;
      CHECK(cut_weight(ch.graph, s) == cut_weight(h, pre));
    }
  }
}

TEST_CASE("cut weight") {
  auto g = triangle();
  CHECK(cut_weight(g, std::vector<std::uint8_t>{0, 1, 0}) == 3);
  CHECK(cut_weight(g, std::vector<std::uint8_t>{1, 0, 1}) == 3);
  CHECK_THROWS_AS(cut_weight(g, std::vector<std::uint8_t>{1, 1, 1}), Error);
  std::vector<std::tuple<VertexId, VertexId, Weight>> e{{0, 1, 7}};
  CHECK(cut_weight(WeightedGraph::from_triples(2, e), std::vector<std::uint8_t>{1, 0}) == 7);
}

TEST_CASE("minimum spanning tree") {
  auto g = triangle();
  std::vector<std::uint64_t> key{1, 2, 3};
  auto t = minimum_spanning_tree(g, key);
  std::vector<EdgeId> used;
  for (VertexId v = 0; v < 3; ++v)
    if (v != t.root()) used.push_back(t.parent_eid(v));
  std::sort(used.begin(), used.end());
  CHECK(used == std::vector<EdgeId>{0, 1});
  std::vector<std::uint64_t> flat{5, 5, 5};
  auto order = kruskal_order(g, flat);
  CHECK(order == std::vector<std::uint32_t>{0, 1});

  Rng rng(12);
  for (int it = 0; it < 10; ++it) {
    auto h = testing::random_graph(30, 130, rng);
    std::vector<std::uint64_t> k(h.num_edges());
    for (auto& x : k) x = rng.below(1000);
    auto tree = minimum_spanning_tree(h, k);
    std::uint64_t total = 0;
    for (VertexId v = 0; v < 30; ++v)
      if (v != tree.root()) total += k[tree.parent_eid(v)];
    // Reference: Prim on the dense key matrix.
    std::vector<std::uint64_t> best(30, ~0ULL);
    std::vector<bool> in(30, false);
    best[0] = 0;
    std::uint64_t ref = 0;
    for (int step = 0; step < 30; ++step) {
      int pick = -1;
      for (int v = 0; v < 30; ++v)
        if (!in[v] && (pick < 0 || best[v] < best[pick])) pick = v;
      in[pick] = true;
      ref += best[pick];
      for (auto inc : h.incident(pick))
        best[inc.neighbor] = std::min(best[inc.neighbor], k[inc.edge]);
    }
    CHECK(total == ref);
  }
}

TEST_CASE("dimacs round trip and errors") {
  auto g = read_dimacs("p max 3 2\ne 1 2 5\ne 2 3 3\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.edge(0).w == 5);
  CHECK(g.edge(1).w == 3);
  CHECK(write_dimacs(g) == "p max 3 2\ne 1 2 5\ne 2 3 3\n");
  Rng rng(1);
  for (int it = 0; it < 100; ++it) {
    auto h = testing::random_graph(2 + rng.below(30), 60, rng, 1000000);
    auto back = read_dimacs(write_dimacs(h));
    CHECK(write_dimacs(back) == write_dimacs(h));
  }
  try {
    read_dimacs("p max 2 1\ne 1 x 3\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
