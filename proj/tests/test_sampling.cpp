#include <doctest.h>

#include <cmath>

#include "mincut/approx_cut.hpp"
#include "mincut/oracles.hpp"
#include "mincut/sampling.hpp"
#include "test_support.hpp"

using namespace mincut;

namespace {

double chi_square(const std::vector<std::size_t>& hist, const std::vector<double>& pmf,
                  std::size_t draws) {
  double x = 0;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    double e = pmf[i] * draws;
    if (e > 0) x += (hist[i] - e) * (hist[i] - e) / e;
  }
  return x;
}

std::vector<double> binomial_pmf(int n, double p) {
  std::vector<double> pmf(n + 1);
  for (int k = 0; k <= n; ++k) {
    pmf[k] = std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1) +
                      k * std::log(p) + (n - k) * std::log1p(-p));
  }
  return pmf;
}

}  // namespace

TEST_CASE("binomial edge cases") {
  Rng rng(1);
  CHECK(binom_half(0, rng) == 0);
  CHECK(binom_p(10, Probability::zero(), rng) == 0);
  CHECK(binom_p(10, Probability::one(), rng) == 10);
  CHECK_THROWS_AS(Probability::from_double(1.5), Error);
  CHECK_THROWS_AS(Probability::from_double(-0.1), Error);
  CHECK(Probability::from_double(0.375).bits == (std::uint64_t{3} << 61));
}

TEST_CASE("binomial chi-square") {
  Rng rng(2);
  const std::size_t draws = 100000;
  std::vector<std::size_t> h1(11, 0), h2(21, 0);
  for (std::size_t i = 0; i < draws; ++i) ++h1[binom_half(10, rng)];
  auto p38 = Probability::from_double(0.375);
  for (std::size_t i = 0; i < draws; ++i) ++h2[binom_p(20, p38, rng)];
  // 0.999 quantiles: chi2(10) = 29.59, chi2(20) = 45.31
  CHECK(chi_square(h1, binomial_pmf(10, 0.5), draws) < 29.59);
  CHECK(chi_square(h2, binomial_pmf(20, 0.375), draws) < 45.31);
}

TEST_CASE("weighted permutation") {
  std::vector<std::tuple<VertexId, VertexId, Weight>> two{{0, 1, 1}, {1, 2, 1000000}};
  auto g = WeightedGraph::from_triples(3, two);
  Rng rng(3);
  int heavy_first = 0;
  for (int i = 0; i < 10000; ++i) heavy_first += weighted_permutation(g, rng)[0] == 1;
  CHECK(heavy_first >= 9990);
}

TEST_CASE("skeleton and chain") {
  std::vector<std::tuple<VertexId, VertexId, Weight>> e{{0, 1, 100}, {1, 2, 3}};
  auto g = WeightedGraph::from_triples(3, e);
  Rng rng(4);
  CHECK(skeleton(g, Probability::one(), rng).graph.edges() == g.edges());
  CHECK(skeleton(g, Probability::zero(), rng).graph.num_edges() == 0);
  auto chain = subsample_chain(g, Probability::one(), 3, rng);
  REQUIRE(chain.size() == 4);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    for (const Edge& x : chain[i].graph.edges()) {
      auto prev = std::find_if(chain[i - 1].graph.edges().begin(),
                               chain[i - 1].graph.edges().end(),
                               [&](const Edge& y) { return y.eid == x.eid; });
      REQUIRE(prev != chain[i - 1].graph.edges().end());
      CHECK(x.w <= prev->w);
    }
  }
  Rng a(5), b(5);
  CHECK(skeleton(g, Probability::from_double(0.5), a).graph.edges() ==
        skeleton(g, Probability::from_double(0.5), b).graph.edges());
}

TEST_CASE("low weight transform bounds") {
  std::vector<std::tuple<VertexId, VertexId, Weight>> big{{0, 1, 1000000000}};
  auto g = WeightedGraph::from_triples(2, big);
  auto lw = low_weight_transform(g, 1000000000);
  CHECK(lw.graph.num_vertices() == 2);
  CHECK(lw.graph.edge(0).w <= 2);
  // Scaling would drop the only edge: the transform is skipped.
  std::vector<std::tuple<VertexId, VertexId, Weight>> pair{{0, 1, 87}};
  auto skip = low_weight_transform(WeightedGraph::from_triples(2, pair), 261);
  CHECK(skip.degenerate);
  CHECK(skip.scale == 1);
  CHECK(skip.graph.edges() == WeightedGraph::from_triples(2, pair).edges());
  Rng rng(6);
  for (int it = 0; it < 50; ++it) {
    auto h = testing::random_graph(3 + rng.below(15), 40, rng, 1000);
    auto t = low_weight_transform(h, logn_approx(h, rng).value);
    REQUIRE_FALSE(t.degenerate);
    const Weight bound = 2 * h.num_edges() * ceil_log2(h.num_vertices());
    for (const Edge& x : t.graph.edges()) {
      CHECK(x.w >= 1);
      CHECK(x.w <= bound);
    }
  }
}

TEST_CASE("scan-first search spans") {
  Rng rng(7);
  for (int it = 0; it < 30; ++it) {
    auto g = testing::random_graph(2 + rng.below(30), 80, rng);
    auto f = scan_first_search(g, 0);
    CHECK(f.size() + 1 == g.num_vertices());
    CHECK_NOTHROW(tree_from_edges(g, f, 0));
  }
}

TEST_CASE("certificate of a unit 4-cycle") {
  std::vector<std::tuple<VertexId, VertexId, Weight>> c4{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}};
  auto g = WeightedGraph::from_triples(4, c4);
  CHECK(sparse_certificate(g, 2).edges() == g.edges());
  std::vector<std::tuple<VertexId, VertexId, Weight>> p{{0, 1, 5}, {1, 2, 1}};
  auto t = sparse_certificate(WeightedGraph::from_triples(3, p), 3);
  CHECK(t.edge(0).w == 3);
  CHECK(t.edge(1).w == 1);
}

TEST_CASE("matula and k-approx on small graphs") {
  std::vector<std::tuple<VertexId, VertexId, Weight>> one{{0, 1, 9}};
  CHECK(matula_approx(WeightedGraph::from_triples(2, one)).value == 9);
  Rng r0(1);
  CHECK(k_approx_min_cut(WeightedGraph::from_triples(2, one), 2, 3, r0).value == 9);
  std::vector<std::tuple<VertexId, VertexId, Weight>> cyc;
  for (VertexId v = 0; v < 7; ++v) cyc.emplace_back(v, (v + 1) % 7, 1);
  CHECK(matula_approx(WeightedGraph::from_triples(7, cyc)).value == 2);
  std::vector<std::tuple<VertexId, VertexId, Weight>> tri{{0, 1, 1}, {1, 2, 2}, {2, 0, 3}};
  Rng r1(2);
  CHECK(k_approx_min_cut(WeightedGraph::from_triples(3, tri), 20, 20, r1).value == 3);

  Rng rng(8);
  for (int it = 0; it < 40; ++it) {
    auto g = testing::random_graph(2 + rng.below(18), 60, rng);
    Weight lambda = stoer_wagner(g).first;
    auto m = matula_approx(g);
    CHECK(m.value >= lambda);
    CHECK(m.value <= 3 * lambda);
    CHECK(cut_weight(g, m.cut.side) == m.value);
    auto k = k_approx_min_cut(g, 2, k_approx_trials(g.num_vertices(), 2), rng);
    CHECK(cut_weight(g, k.cut.side) == k.value);
    CHECK(k.value >= lambda);
    auto c = constant_approx_min_cut(g, rng);
    CHECK(cut_weight(g, c.cut.side) == c.value);
  }
}
