#include "mincut/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "mincut/parallel.hpp"
#include "mincut/union_find.hpp"

namespace mincut {

Probability Probability::from_double(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::BadProbability, "p outside [0, 1]");
  if (p == 1.0) return one();
  return {static_cast<std::uint64_t>(std::ldexp(p, 64)), false};
}

double Probability::to_double() const {
  return is_one ? 1.0 : std::ldexp(static_cast<double>(bits), -64);
}

Probability Probability::halved() const {
  if (is_one) return {std::uint64_t{1} << 63, false};
  return {bits >> 1, false};
}

std::uint64_t binom_half(std::uint64_t n, Rng& rng) {
  std::uint64_t s = 0;
  for (; n >= 64; n -= 64) s += std::popcount(rng.next_u64());
  if (n > 0) s += std::popcount(rng.next_u64() & ((std::uint64_t{1} << n) - 1));
  return s;
}

std::uint64_t binom_p(std::uint64_t n, Probability p, Rng& rng) {
  if (p.is_one) return n;
  // Compare each trial's uniform U with p bit by bit from the top. A trial is
  // decided at the first bit where U and p differ.
  std::uint64_t successes = 0, open = n;
  for (int bit = 63; bit >= 0 && open > 0; --bit) {
    const std::uint64_t ones = binom_half(open, rng);
    if ((p.bits >> bit) & 1) {
      successes += open - ones;
      open = ones;
    } else {
      open -= ones;
    }
  }
  return successes;
}

std::vector<std::uint32_t> weighted_permutation(const WeightedGraph& g, Rng& rng) {
  const std::uint64_t base = rng.next_u64();
  const std::size_t m = g.num_edges();
  std::vector<double> key(m);
  parallel_for(0, m, [&](std::size_t i) {
    Rng r(base, g.edge(i).eid);
    key[i] = -std::log(r.next_open01()) / static_cast<double>(g.edge(i).w);
  }, 1024);
  std::vector<std::uint32_t> order(m);
  for (std::uint32_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return key[a] != key[b] ? key[a] < key[b] : g.edge(a).eid < g.edge(b).eid;
  });
  return order;
}

namespace {

WeightedGraph with_multiplicity(const WeightedGraph& g, const std::vector<std::uint64_t>& x) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (x[i] == 0) continue;
    Edge e = g.edge(i);
    e.w = x[i];
    edges.push_back(e);
  }
  return WeightedGraph(g.num_vertices(), std::move(edges));
}

std::vector<std::uint64_t> sample_multiplicity(const WeightedGraph& g, Probability p,
                                               Rng& rng) {
  const std::uint64_t base = rng.next_u64();
  std::vector<std::uint64_t> x(g.num_edges());
  parallel_for(0, g.num_edges(), [&](std::size_t i) {
    Rng r(base, g.edge(i).eid);
    x[i] = binom_p(g.edge(i).w, p, r);
  }, 256);
  return x;
}

}  // namespace

Skeleton skeleton(const WeightedGraph& g, Probability p, Rng& rng) {
  return {with_multiplicity(g, sample_multiplicity(g, p, rng)), p};
}

std::vector<Skeleton> subsample_chain(const WeightedGraph& g, Probability p, std::size_t k,
                                      Rng& rng) {
  std::vector<Skeleton> chain;
  auto x = sample_multiplicity(g, p, rng);
  chain.push_back({with_multiplicity(g, x), p});
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t base = rng.next_u64();
    parallel_for(0, g.num_edges(), [&](std::size_t j) {
      Rng r(base, g.edge(j).eid);
      x[j] = binom_half(x[j], r);
    }, 256);
    p = p.halved();
    chain.push_back({with_multiplicity(g, x), p});
  }
  return chain;
}

std::uint32_t ceil_log2(std::size_t n) {
  return n <= 2 ? 1 : static_cast<std::uint32_t>(std::bit_width(n - 1));
}

LowWeightGraph low_weight_transform(const WeightedGraph& g, Weight c_tilde) {
  const std::size_t n = g.num_vertices();
  auto fallback = [&] {
    LowWeightGraph out{g, 1, std::vector<VertexId>(n), true};
    for (VertexId v = 0; v < n; ++v) out.map[v] = v;
    return out;
  };
  UnionFind uf(n);
  for (const Edge& e : g.edges()) {
    if (e.w > c_tilde) uf.unite(e.u, e.v);
  }
  std::vector<std::uint32_t> labels(n);
  for (VertexId v = 0; v < n; ++v) labels[v] = uf.find(v);
  Contracted c = contract(g, labels);
  const std::size_t n1 = c.graph.num_vertices(), m1 = c.graph.num_edges();
  if (n1 < 2 || m1 == 0) return fallback();

  const Weight bound = 2 * static_cast<Weight>(m1) * ceil_log2(n1);
  const Weight s = std::max<Weight>(1, (c_tilde + bound - 1) / bound);
  std::vector<Edge> kept;
  for (const Edge& e : c.graph.edges()) {
    if (e.w < s) continue;
    Edge k = e;
    k.w = e.w / s;
    kept.push_back(k);
  }
  WeightedGraph h(n1, std::move(kept));
  if (!h.is_connected()) return fallback();
  return {std::move(h), s, std::move(c.map), false};
}

}  // namespace mincut
