#include <doctest.h>

#include <numeric>

#include "mincut/oracles.hpp"
#include "mincut/tree_packing.hpp"
#include "mincut/two_respecting.hpp"
#include "test_support.hpp"

using namespace mincut;
using mincut::testing::random_graph;

namespace {

std::vector<EdgeId> tree_eids(const RootedTree& t) {
  std::vector<EdgeId> out;
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    if (v != t.root()) out.push_back(t.parent_eid(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("a tree packs into itself") {
  Rng rng(1);
  const WeightedGraph g = random_graph(15, 14, rng);
  Rng run(4);
  const auto trees = pack_trees(g, run);
  REQUIRE(!trees.empty());
  std::vector<EdgeId> all(14);
  std::iota(all.begin(), all.end(), 0);
  for (const auto& t : trees) CHECK(tree_eids(t) == all);
}

TEST_CASE("two vertices give the single edge") {
  auto g = WeightedGraph::from_triples(
      2, std::vector<std::tuple<VertexId, VertexId, Weight>>{{0, 1, 7}});
  Rng rng(2);
  for (const auto& t : pack_trees(g, rng)) CHECK(tree_eids(t) == std::vector<EdgeId>{0});
}

TEST_CASE("greedy packing loads grow by a spanning tree per round") {
  Rng rng(3);
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = 2 + rng.below(30);
    const WeightedGraph g = random_graph(n, n + rng.below(4 * n), rng, 9);
    const Packing p = pack_greedy(g, 12);
    std::uint64_t total = 0;
    for (std::size_t r = 1; r <= p.rounds; ++r) {
      const Packing q = pack_greedy(g, r);
      total = std::accumulate(q.load.begin(), q.load.end(), std::uint64_t{0});
      CHECK(total == r * (n - 1));
    }
    std::vector<std::uint64_t> load(g.num_edges(), 0);
    for (const auto& t : p.trees) {
      CHECK(t.size() == n - 1);
      CHECK_NOTHROW(tree_from_edges(g, t));
      for (auto i : t) ++load[i];
    }
    CHECK(load == p.load);
  }
}

TEST_CASE("packed trees span g and are deterministic per seed") {
  Rng gen(5);
  for (int it = 0; it < 20; ++it) {
    const std::size_t n = 3 + gen.below(30);
    const WeightedGraph g = random_graph(n, n + gen.below(5 * n), gen);
    Rng a(100 + it), b(100 + it);
    const auto ta = pack_trees(g, a);
    const auto tb = pack_trees(g, b);
    REQUIRE(ta.size() == tb.size());
    for (std::size_t i = 0; i < ta.size(); ++i) {
      CHECK(ta[i].num_vertices() == n);
      CHECK(tree_eids(ta[i]) == tree_eids(tb[i]));
    }
  }
}

TEST_CASE("explicit tree count is honoured") {
  Rng gen(6);
  const WeightedGraph g = random_graph(20, 60, gen);
  Rng rng(1);
  CHECK(pack_trees(g, rng, 3).size() == 3);
}

TEST_CASE("minimum cut 2-respects some packed tree") {
  Rng gen(8);
  int hits = 0;
  const int runs = 200;
  for (int it = 0; it < runs; ++it) {
    const std::size_t n = 2 + gen.below(19);
    const WeightedGraph g = random_graph(n, n - 1 + gen.below(4 * n), gen);
    const Weight lambda = stoer_wagner(g).first;
    Rng rng(it);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& t : pack_trees(g, rng)) best = std::min(best, brute_2respecting(g, t).value);
    hits += best == static_cast<std::int64_t>(lambda);
  }
  MESSAGE("hits: " << hits << "/" << runs);
  CHECK(hits >= runs * 95 / 100);
}

TEST_CASE("disconnected input is rejected") {
  auto g = WeightedGraph::from_triples(
      4, std::vector<std::tuple<VertexId, VertexId, Weight>>{{0, 1, 1}, {2, 3, 1}});
  Rng rng(0);
  CHECK_THROWS_AS(pack_trees(g, rng), Error);
}
