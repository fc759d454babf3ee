#include <doctest.h>

#include <json.hpp>

#include "mincut/driver.hpp"
#include "mincut/oracles.hpp"
#include "test_support.hpp"

using namespace mincut;
using mincut::testing::random_graph;

namespace {

WeightedGraph triples(std::size_t n, std::vector<std::tuple<VertexId, VertexId, Weight>> t) {
  return WeightedGraph::from_triples(n, t);
}

}  // namespace

TEST_CASE("path fixture gives the lightest edge") {
  const auto g = triples(4, {{0, 1, 5}, {1, 2, 2}, {2, 3, 7}});
  RunConfig cfg;
  cfg.verify = true;
  const RunReport r = run_mincut(g, cfg);
  CHECK(r.value == 2);
  CHECK(r.verified == true);
  REQUIRE(r.cut.witness);
  CHECK(r.cut.witness->edges == std::vector<EdgeId>{1});
  CHECK(r.cut.side[0] == r.cut.side[1]);
  CHECK(r.cut.side[1] != r.cut.side[2]);
}

TEST_CASE("triangle verifies") {
  const auto g = triples(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
  for (Algo a : {Algo::Exact, Algo::Matula, Algo::KApprox, Algo::ConstApprox}) {
    RunConfig cfg;
    cfg.algo = a;
    cfg.verify = true;
    const RunReport r = run_mincut(g, cfg);
    CHECK(r.verified == true);
    CHECK(cut_weight(g, r.cut.side) == r.value);
    if (a == Algo::Exact) CHECK(r.value == 3);
  }
}

TEST_CASE("high degree vertices are handled through ternarization") {
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    const std::size_t n = 6 + rng.below(10);
    std::vector<Edge> edges;
    EdgeId eid = 0;
    for (VertexId v = 1; v < n; ++v) edges.push_back({0, v, 1 + rng.below(9), eid++});
    for (int k = 0; k < 8; ++k) {
      auto a = static_cast<VertexId>(rng.below(n)), b = static_cast<VertexId>(rng.below(n));
      if (a != b) edges.push_back({a, b, 1 + rng.below(9), eid++});
    }
    const WeightedGraph g(n, std::move(edges));
    RunConfig cfg;
    cfg.seed = it;
    const RunReport r = run_mincut(g, cfg);
    CHECK(r.value == stoer_wagner(g).first);
    CHECK(cut_weight(g, r.cut.side) == r.value);
  }
}

TEST_CASE("exact matches the oracle on random graphs") {
  Rng gen(12);
  int hits = 0;
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 2 + gen.below(30);
    const WeightedGraph g = random_graph(n, n - 1 + gen.below(4 * n), gen);
    RunConfig cfg;
    cfg.seed = it;
    const RunReport r = run_mincut(g, cfg);
    CHECK(cut_weight(g, r.cut.side) == r.value);
    hits += r.value == stoer_wagner(g).first;
  }
  CHECK(hits >= 49);
}

TEST_CASE("approximations are realizable cuts") {
  Rng gen(13);
  for (int it = 0; it < 20; ++it) {
    const std::size_t n = 2 + gen.below(20);
    const WeightedGraph g = random_graph(n, n - 1 + gen.below(3 * n), gen);
    const Weight lambda = stoer_wagner(g).first;
    for (Algo a : {Algo::Matula, Algo::KApprox, Algo::ConstApprox}) {
      RunConfig cfg;
      cfg.algo = a;
      cfg.seed = it;
      const RunReport r = run_mincut(g, cfg);
      CHECK(cut_weight(g, r.cut.side) == r.value);
      CHECK(r.value >= lambda);
    }
  }
}

TEST_CASE("report schema and determinism across worker counts") {
  Rng gen(14);
  const WeightedGraph g = random_graph(25, 80, gen);
  std::string first;
  for (std::size_t threads : {1, 4, 8}) {
    RunConfig cfg;
    cfg.seed = 99;
    cfg.threads = threads;
    const std::string js = report_json(run_mincut(g, cfg), cfg, false);
    if (first.empty()) first = js;
    CHECK(js == first);
  }
  const auto j = nlohmann::json::parse(first);
  for (const char* key : {"value", "side", "witness", "seed", "algo", "trees", "constants",
                          "timings_ms", "verified"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["side"].size() == 25);
  CHECK(j["algo"] == "exact");
}

TEST_CASE("fault injection is caught by verification") {
  const auto g = triples(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
  RunConfig cfg;
  cfg.verify = true;
  cfg.inject_fault = true;
  CHECK(run_mincut(g, cfg).verified == false);
}

TEST_CASE("bad inputs are rejected") {
  CHECK_THROWS_AS(parse_algo("karger"), Error);
  const auto g = triples(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK_THROWS_AS(run_mincut(g, RunConfig{}), Error);
}
