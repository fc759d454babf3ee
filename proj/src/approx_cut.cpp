#include "mincut/approx_cut.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mincut/component_ops.hpp"
#include "mincut/parallel.hpp"
#include "mincut/path_ops.hpp"
#include "mincut/sampling.hpp"
#include "mincut/union_find.hpp"

namespace mincut {

namespace {

void require_connected(const WeightedGraph& g) {
  if (g.num_vertices() < 2) throw Error(ErrorCode::TrivialCut, "need at least two vertices");
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

struct Trial {
  Weight value = std::numeric_limits<Weight>::max();
  std::vector<std::uint8_t> side;
};

Trial contraction_trial(const WeightedGraph& g, Rng rng) {
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  Trial best;
  for (VertexId v = 0; v < n; ++v) {
    Weight d = g.weighted_degree(v);
    if (d < best.value) {
      best.value = d;
      best.side.assign(n, 0);
      best.side[v] = 1;
    }
  }

  // Contraction order = Kruskal order under a weighted random permutation.
  const auto perm = weighted_permutation(g, rng);
  std::vector<std::uint64_t> rank(m);
  for (std::uint32_t i = 0; i < m; ++i) rank[perm[i]] = i;
  const auto mst = kruskal_order(g, rank);
  std::vector<RootedTree::TreeEdge> tedges;
  for (std::uint32_t pos : mst) {
    tedges.push_back({g.edge(pos).u, g.edge(pos).v, -static_cast<std::int64_t>(rank[pos]), pos});
  }
  RootedTree tree(n, 0, tedges);
  std::vector<VertexId> child_of(m, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    if (v != tree.root()) child_of[tree.parent_eid(v)] = v;
  }
  // Chain edges weigh 1, above every -rank, so path minima stay on real edges.
  const TernaryTree tt = ternarize_tree(tree, 1, static_cast<EdgeId>(m));
  const RCTree rc = build_rc_tree(tt.tree, rng.next_u64());
  const TreeLca lca(tt.tree);

  // Heaviest MST edge on each edge's tree path: the step that makes it internal.
  PathOpBuilder paths(rc, lca);
  for (std::uint32_t i = 0; i < m; ++i) paths.query_path(g.edge(i).u, g.edge(i).v);
  PathBatch pbatch(rc, PathSubtreeOps(tt.tree));
  const auto heaviest = paths.resolve(pbatch.evaluate(paths.ops()));
  std::vector<std::vector<std::uint32_t>> internal(m);
  for (std::uint32_t i = 0; i < m; ++i) internal[heaviest[i].eid].push_back(i);

  std::vector<std::int64_t> weight(tt.tree.num_vertices(), 0);
  for (VertexId v = 0; v < n; ++v) weight[v] = static_cast<std::int64_t>(g.weighted_degree(v));
  ComponentBatch cbatch(rc, ComponentWeightOps(weight, tt.is_chain));
  std::vector<ComponentOp> ops;
  auto push = [&](ComponentWeightOps::Update u) {
    ops.push_back({static_cast<std::uint32_t>(ops.size() + 1), u});
  };
  for (std::size_t j = 0; j + 1 < mst.size(); ++j) {
    const std::uint32_t pos = mst[j];
    for (std::uint32_t i : internal[pos]) {
      const auto w = static_cast<std::int64_t>(g.edge(i).w);
      push(ComponentWeightOps::subtract(g.edge(i).u, w));
      push(ComponentWeightOps::subtract(g.edge(i).v, w));
    }
    push(ComponentWeightOps::join(child_of[pos]));
    ops.push_back({static_cast<std::uint32_t>(ops.size() + 1),
                   ComponentWeightOps::QueryWeight{g.edge(pos).u}});
  }
  const auto weights = cbatch.evaluate(ops);

  std::size_t best_step = mst.size();
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] >= 0 && static_cast<Weight>(weights[j]) < best.value) {
      best.value = static_cast<Weight>(weights[j]);
      best_step = j;
    }
  }
  if (best_step < mst.size()) {
    UnionFind uf(n);
    for (std::size_t j = 0; j <= best_step; ++j) uf.unite(g.edge(mst[j]).u, g.edge(mst[j]).v);
    const VertexId anchor = uf.find(g.edge(mst[best_step]).u);
    best.side.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) best.side[v] = uf.find(v) == anchor;
  }
  return best;
}

}  // namespace

std::size_t k_approx_trials(std::size_t n, double k, double alpha) {
  if (n < 2) return 1;
  const double nd = static_cast<double>(n);
  const double t = std::ceil(alpha * std::pow(nd, 2.0 / k) * std::log(nd));
  return std::max<std::size_t>(1, static_cast<std::size_t>(t));
}

ApproxCut k_approx_min_cut(const WeightedGraph& g, double k, std::size_t trials, Rng& rng) {
  require_connected(g);
  const std::uint64_t base = rng.next_u64();
  std::vector<Trial> results(std::max<std::size_t>(1, trials));
  parallel_for(0, results.size(), [&](std::size_t i) {
    results[i] = contraction_trial(g, Rng(base, i));
  });
  (void)k;  // k only shapes the trial count
  std::size_t pick = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value < results[pick].value) pick = i;
  }
  ApproxCut out;
  out.value = results[pick].value;
  out.cut.side = std::move(results[pick].side);
  out.cut.weight = out.value;
  return out;
}

ApproxCut logn_approx(const WeightedGraph& g, Rng& rng, double alpha) {
  const double k = ceil_log2(g.num_vertices());
  return k_approx_min_cut(g, k, k_approx_trials(g.num_vertices(), k, alpha), rng);
}

std::vector<std::uint32_t> scan_first_search(const WeightedGraph& g, VertexId r,
                                             const std::vector<std::uint8_t>& alive) {
  const std::size_t n = g.num_vertices();
  auto usable = [&](std::uint32_t pos) { return alive.empty() || alive[pos] != 0; };

  // Spanning forest by BFS, then a preorder of it.
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::vector<VertexId>> kids(n);
  std::vector<VertexId> roots, queue;
  auto bfs = [&](VertexId s) {
    roots.push_back(s);
    seen[s] = 1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (const auto& inc : g.incident(v)) {
        if (!usable(inc.edge) || seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        kids[v].push_back(inc.neighbor);
        queue.push_back(inc.neighbor);
      }
    }
  };
  if (r < n) bfs(r);
  for (VertexId v = 0; v < n; ++v) {
    if (!seen[v]) bfs(v);
  }
  std::vector<std::uint32_t> pre(n);
  std::vector<std::uint8_t> is_root(n, 0);
  std::uint32_t clock = 0;
  std::vector<VertexId> stack;
  for (VertexId s : roots) {
    is_root[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      pre[v] = clock++;
      for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back(*it);
    }
  }

  std::vector<std::uint32_t> forest;
  for (VertexId v = 0; v < n; ++v) {
    if (is_root[v]) continue;
    std::uint32_t best = 0xffffffffu;
    for (const auto& inc : g.incident(v)) {
      if (!usable(inc.edge)) continue;
      if (best == 0xffffffffu) {
        best = inc.edge;
        continue;
      }
      const VertexId a = inc.neighbor, b = g.edge(best).other(v);
      if (pre[a] < pre[b] || (a == b && g.edge(inc.edge).eid < g.edge(best).eid)) {
        best = inc.edge;
      }
    }
    forest.push_back(best);
  }
  return forest;
}

std::vector<Weight> certificate_counts(const WeightedGraph& g, Weight k) {
  const std::size_t m = g.num_edges();
  std::vector<Weight> residual(m), count(m, 0);
  std::vector<std::uint8_t> alive(m, 1);
  for (std::size_t i = 0; i < m; ++i) residual[i] = g.edge(i).w;
  for (Weight round = 0; round < k; ++round) {
    auto forest = scan_first_search(g, 0, alive);
    if (forest.empty()) break;
    for (std::uint32_t pos : forest) {
      ++count[pos];
      if (--residual[pos] == 0) alive[pos] = 0;
    }
  }
  return count;
}

WeightedGraph sparse_certificate(const WeightedGraph& g, Weight k) {
  const auto count = certificate_counts(g, k);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (count[i] == 0) continue;
    Edge e = g.edge(i);
    e.w = count[i];
    edges.push_back(e);
  }
  return WeightedGraph(g.num_vertices(), std::move(edges));
}

ApproxCut matula_approx(const WeightedGraph& g, double eps) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw Error(ErrorCode::TrivialCut, "need at least two vertices");
  if (!(eps > 0)) throw Error(ErrorCode::InvariantViolation, "eps must be positive");
  ApproxCut out;
  if (!g.is_connected()) {
    auto labels = g.component_labels();
    out.cut.side.resize(n);
    for (VertexId v = 0; v < n; ++v) out.cut.side[v] = labels[v] == 0;
    return out;
  }
  WeightedGraph cur = g;
  std::vector<VertexId> map(n);
  std::iota(map.begin(), map.end(), 0);
  out.value = std::numeric_limits<Weight>::max();
  while (cur.num_vertices() >= 2) {
    VertexId x = 0;
    Weight d = std::numeric_limits<Weight>::max();
    for (VertexId v = 0; v < cur.num_vertices(); ++v) {
      if (cur.weighted_degree(v) < d) {
        d = cur.weighted_degree(v);
        x = v;
      }
    }
    if (d < out.value) {
      out.value = d;
      out.cut.side.assign(n, 0);
      for (VertexId v = 0; v < n; ++v) out.cut.side[v] = map[v] == x;
    }
    const auto k = std::clamp<Weight>(
        static_cast<Weight>(std::ceil(static_cast<double>(d) / (2.0 + eps))), 1,
        std::max<Weight>(1, d - 1));
    // Edges with copies left outside the certificate join endpoints that no
    // cut of weight <= k separates.
    const auto count = certificate_counts(cur, k);
    UnionFind uf(cur.num_vertices());
    bool progress = false;
    for (std::size_t i = 0; i < cur.num_edges(); ++i) {
      if (count[i] < cur.edge(i).w) progress |= uf.unite(cur.edge(i).u, cur.edge(i).v);
    }
    if (!progress) break;
    std::vector<std::uint32_t> labels(cur.num_vertices());
    for (VertexId v = 0; v < labels.size(); ++v) labels[v] = uf.find(v);
    Contracted next = contract(cur, labels);
    if (next.graph.total_weight() >= cur.total_weight()) {
      throw Error(ErrorCode::InvariantViolation, "contraction did not shrink the graph");
    }
    for (VertexId v = 0; v < n; ++v) map[v] = next.map[map[v]];
    cur = std::move(next.graph);
  }
  out.cut.weight = out.value;
  return out;
}

ApproxCut constant_approx_min_cut(const WeightedGraph& g, Rng& rng,
                                  const ConstantApproxConfig& cfg) {
  require_connected(g);
  const std::size_t n = g.num_vertices();
  const double L = ceil_log2(n);
  ApproxCut coarse = logn_approx(g, rng, cfg.alpha);
  LowWeightGraph lw = low_weight_transform(g, coarse.value);
  const Weight C = logn_approx(lw.graph, rng, cfg.alpha).value;

  const std::size_t guesses = ceil_log2(static_cast<std::size_t>(L));
  const double p0 = std::min(1.0, L * L / static_cast<double>(C));
  auto chain = subsample_chain(lw.graph, Probability::from_double(p0), guesses, rng);
  const auto k = static_cast<Weight>(std::ceil(cfg.beta * L));
  const auto tau = static_cast<Weight>(std::ceil(cfg.beta * L / (2.0 + cfg.eps)));

  std::vector<ApproxCut> est(chain.size());
  parallel_for(0, chain.size(), [&](std::size_t j) {
    est[j] = matula_approx(sparse_certificate(chain[j].graph, k), cfg.eps);
  });
  // The sparsest skeleton whose estimate still clears the threshold.
  std::size_t pick = 0;
  for (std::size_t j = chain.size(); j-- > 0;) {
    if (est[j].value >= tau) {
      pick = j;
      break;
    }
  }
  std::vector<std::uint8_t> side(n);
  for (VertexId v = 0; v < n; ++v) side[v] = est[pick].cut.side[lw.map[v]];
  const auto inside = std::count(side.begin(), side.end(), 1);
  if (inside == 0 || inside == static_cast<long>(n)) return coarse;
  ApproxCut out;
  out.value = cut_weight(g, side);
  out.cut.side = std::move(side);
  out.cut.weight = out.value;
  if (coarse.value < out.value) return coarse;
  return out;
}

}  // namespace mincut
