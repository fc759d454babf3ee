#include "mincut/tree_packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mincut/sampling.hpp"
#include "mincut/union_find.hpp"

namespace mincut {

Packing pack_greedy(const WeightedGraph& skeleton, std::size_t rounds) {
  const std::size_t m = skeleton.num_edges();
  Packing out;
  out.load.assign(m, 0);
  std::vector<std::uint32_t> order(m);
  for (std::size_t r = 0; r < rounds; ++r) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      const auto lhs = static_cast<unsigned __int128>(out.load[a]) * skeleton.edge(b).w;
      const auto rhs = static_cast<unsigned __int128>(out.load[b]) * skeleton.edge(a).w;
      return lhs != rhs ? lhs < rhs : skeleton.edge(a).eid < skeleton.edge(b).eid;
    });
    UnionFind uf(skeleton.num_vertices());
    std::vector<std::uint32_t> tree;
    for (std::uint32_t i : order) {
      if (uf.unite(skeleton.edge(i).u, skeleton.edge(i).v)) tree.push_back(i);
    }
    for (std::uint32_t i : tree) ++out.load[i];
    out.trees.push_back(std::move(tree));
  }
  out.rounds = rounds;
  return out;
}

namespace {

// Spanning tree of g from the chosen edges of the contracted graph plus an
// arbitrary spanning forest inside every contracted vertex.
RootedTree lift(const WeightedGraph& g, std::span<const VertexId> map,
                const std::vector<std::uint32_t>& by_eid,
                const WeightedGraph& h, std::span<const std::uint32_t> tree) {
  UnionFind uf(g.num_vertices());
  std::vector<std::uint32_t> chosen;
  for (std::uint32_t i : tree) {
    const std::uint32_t pos = by_eid[h.edge(i).eid];
    if (uf.unite(g.edge(pos).u, g.edge(pos).v)) chosen.push_back(pos);
  }
  for (std::uint32_t pos = 0; pos < g.num_edges(); ++pos) {
    const Edge& e = g.edge(pos);
    if (map[e.u] == map[e.v] && uf.unite(e.u, e.v)) chosen.push_back(pos);
  }
  return tree_from_edges(g, chosen);
}

}  // namespace

std::vector<RootedTree> pack_trees(const WeightedGraph& g, Rng& rng, std::size_t tree_count,
                                   const PackingConfig& cfg, PackingReport* report) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw Error(ErrorCode::TrivialCut, "graph has a single vertex");
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "tree packing needs a connected graph");
  const std::uint32_t L = ceil_log2(n);
  if (tree_count == 0) {
    tree_count = static_cast<std::size_t>(std::ceil(cfg.delta * std::log2(static_cast<double>(n))));
    tree_count = std::max<std::size_t>(tree_count, 1);
  }

  Rng approx_rng = rng.fork(1);
  const Weight c = constant_approx_min_cut(g, approx_rng, cfg.approx).value;
  const LowWeightGraph lw = low_weight_transform(g, c);
  const Weight c_scaled = std::max<Weight>(1, c / lw.scale);

  const double p0 = std::min(1.0, cfg.gamma * L / static_cast<double>(c_scaled));
  Rng skel_rng = rng.fork(2);
  Probability p = p0 >= 1.0 ? Probability::one() : Probability::from_double(p0);
  Skeleton sk = skeleton(lw.graph, p, skel_rng);
  if (!sk.graph.is_connected()) {
    const double p1 = std::min(1.0, 2 * p0);
    p = p1 >= 1.0 ? Probability::one() : Probability::from_double(p1);
    sk = skeleton(lw.graph, p, skel_rng);
    if (!sk.graph.is_connected()) {
      throw Error(ErrorCode::SkeletonDisconnected, "skeleton disconnected after retry");
    }
  }

  const std::size_t rounds = static_cast<std::size_t>(L) * L;
  const Packing packing = pack_greedy(sk.graph, rounds);

  // Uniform sample of distinct packed trees.
  std::vector<std::uint32_t> pick(rounds);
  std::iota(pick.begin(), pick.end(), 0);
  Rng pick_rng = rng.fork(3);
  const std::size_t take = std::min(tree_count, rounds);
  for (std::size_t i = 0; i < take; ++i) {
    std::swap(pick[i], pick[i + pick_rng.below(rounds - i)]);
  }
  pick.resize(take);
  std::sort(pick.begin(), pick.end());

  std::vector<std::uint32_t> by_eid(static_cast<std::size_t>(g.max_eid()) + 1, 0);
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) by_eid[g.edge(i).eid] = i;
  std::vector<RootedTree> trees;
  for (std::uint32_t r : pick) trees.push_back(lift(g, lw.map, by_eid, sk.graph, packing.trees[r]));

  if (report) {
    report->approx_cut = c;
    report->p = p.to_double();
    report->rounds = rounds;
    report->skeleton_vertices = sk.graph.num_vertices();
  }
  return trees;
}

}  // namespace mincut
