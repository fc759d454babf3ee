#include "mincut/two_respecting.hpp"

#include <algorithm>
#include <numeric>

#include "mincut/parallel.hpp"
#include "mincut/path_ops.hpp"

namespace mincut {

std::vector<std::uint8_t> two_cut_side(const RootedTree& t, const TwoCut& cut) {
  const std::size_t n = t.num_vertices();
  std::vector<std::uint8_t> flip(n, 0), side(n, 0);
  for (VertexId c : cut.edges) flip[c] ^= 1;
  for (VertexId v : t.top_down_order()) {
    side[v] = (v == t.root() ? 0 : side[t.parent(v)]) ^ flip[v];
  }
  return side;
}

namespace {

// Copy of t with parent_weight(v) = w[v] and parent_eid(v) = v, so path
// minima report the child vertex of the edge that attains them.
RootedTree reweighted(const RootedTree& t, std::span<const std::int64_t> w) {
  std::vector<RootedTree::TreeEdge> edges;
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    if (v != t.root()) edges.push_back({t.parent(v), v, w[v], v});
  }
  return RootedTree(t.num_vertices(), t.root(), edges);
}

std::vector<std::uint8_t> tree_eid_mask(const WeightedGraph& g, const RootedTree& t) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.max_eid()) + 1, 0);
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    if (v != t.root()) mask[t.parent_eid(v)] = 1;
  }
  return mask;
}

// Rooted tree with explicit parent array in top-down order (index 0 is the
// root), edge weights with witnesses, and the minimum over edges already
// spliced away.
struct TreeCopy {
  std::vector<VertexId> parent;
  std::vector<Keyed> w;
  std::vector<VertexId> label;
  Keyed pruned;

  Keyed lightest() const {
    Keyed best = pruned;
    for (std::size_t v = 1; v < w.size(); ++v) best = kmin(best, w[v]);
    return best;
  }

  std::size_t index_of(VertexId lab) const {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), std::pair{lab, VertexId{0}});
    return it != sorted.end() && it->first == lab ? it->second : kNoVertex;
  }

  void reindex() {
    sorted.resize(label.size());
    for (VertexId i = 0; i < label.size(); ++i) sorted[i] = {label[i], i};
    std::sort(sorted.begin(), sorted.end());
  }

  // Adds x to every edge on the root path of each listed vertex.
  void add_paths(std::span<const std::pair<VertexId, std::int64_t>> adds) {
    std::vector<std::int64_t> below(w.size(), 0);
    for (const auto& [lab, x] : adds) below[index_of(lab)] += x;
    for (std::size_t v = w.size(); v-- > 1;) {
      w[v] = w[v].plus(below[v]);
      below[parent[v]] += below[v];
    }
  }

  // Keeps the root, the listed vertices and branch points between them.
  TreeCopy compress(std::span<const VertexId> keep_labels) const {
    const std::size_t n = w.size();
    std::vector<std::uint32_t> marked(n, 0), kids(n, 0);
    for (VertexId lab : keep_labels) marked[index_of(lab)] = 1;
    std::vector<std::uint32_t> count(marked);
    for (std::size_t v = n; v-- > 1;) {
      if (count[v] > 0) {
        count[parent[v]] += count[v];
        ++kids[parent[v]];
      }
    }
    TreeCopy out;
    out.pruned = pruned;
    // anchor: index in `out` of the nearest kept ancestor-or-self.
    std::vector<VertexId> anchor(n, 0);
    std::vector<std::uint8_t> kept(n, 0);
    std::vector<Keyed> seg(n);
    kept[0] = 1;
    out.parent.push_back(kNoVertex);
    out.w.push_back(Keyed{});
    out.label.push_back(label[0]);
    for (std::size_t v = 1; v < n; ++v) {
      if (count[v] == 0) {
        out.pruned = kmin(out.pruned, w[v]);
        continue;
      }
      const VertexId p = parent[v];
      seg[v] = kept[p] ? w[v] : kmin(w[v], seg[p]);
      anchor[v] = anchor[p];
      if (marked[v] || kids[v] >= 2) {
        kept[v] = 1;
        anchor[v] = static_cast<VertexId>(out.w.size());
        out.parent.push_back(anchor[p]);
        out.w.push_back(seg[v]);
        out.label.push_back(label[v]);
      }
    }
    out.reindex();
    return out;
  }

  std::vector<std::pair<VertexId, VertexId>> sorted;
};

TreeCopy copy_of(const RootedTree& t) {
  TreeCopy c;
  const auto& order = t.top_down_order();
  std::vector<VertexId> pos(t.num_vertices());
  for (VertexId i = 0; i < order.size(); ++i) pos[order[i]] = i;
  c.parent.resize(order.size());
  c.w.resize(order.size());
  c.label.resize(order.size());
  for (VertexId i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    c.label[i] = v;
    if (v == t.root()) {
      c.parent[i] = kNoVertex;
    } else {
      c.parent[i] = pos[t.parent(v)];
      c.w[i] = Keyed{t.parent_weight(v), t.parent_eid(v)};
    }
  }
  c.reindex();
  return c;
}

}  // namespace

std::vector<std::int64_t> f_e_weights(const WeightedGraph& g, const RootedTree& t,
                                      std::uint64_t seed) {
  const std::size_t n = t.num_vertices();
  const TernaryTree tt = ternarize_tree(t, 0, static_cast<EdgeId>(g.max_eid()) + 1);
  std::vector<std::int64_t> zero(tt.tree.num_vertices(), 0);
  const RootedTree base = reweighted(tt.tree, zero);
  const RCTree rc = build_rc_tree(base, seed);
  const TreeLca lca(base);
  PathOpBuilder b(rc, lca);
  for (const Edge& e : g.edges()) b.add_path(e.u, e.v, static_cast<std::int64_t>(e.w));
  std::vector<std::size_t> handle(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (v != t.root()) handle[v] = b.query_edge(v);
  }
  PathBatch batch(rc, PathSubtreeOps(base));
  const auto res = b.resolve(batch.evaluate(b.ops()));
  std::vector<std::int64_t> f(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (v != t.root()) f[v] = res[handle[v]].w;
  }
  return f;
}

TwoCut descendant_case(const WeightedGraph& g, const RootedTree& t,
                       std::span<const std::int64_t> f_e, std::uint64_t seed) {
  const RootedTree tf = reweighted(t, f_e);
  const RCTree rc = build_rc_tree(tf, seed);
  const TreeLca lca(tf);
  const auto in_tree = tree_eid_mask(g, t);

  // Non-tree edges bucketed by their top edges (children of their LCA).
  struct Pending {
    VertexId x, y;
    std::int64_t w;
  };
  std::vector<std::vector<Pending>> by_top(t.num_vertices());
  for (const Edge& e : g.edges()) {
    if (in_tree[e.eid]) continue;
    const VertexId l = lca.lca(e.u, e.v);
    const Pending p{e.u, e.v, static_cast<std::int64_t>(e.w)};
    if (e.u != l) by_top[lca.child_toward(l, e.u)].push_back(p);
    if (e.v != l) by_top[lca.child_toward(l, e.v)].push_back(p);
  }

  PathOpBuilder b(rc, lca);
  std::vector<std::pair<VertexId, std::size_t>> queries;
  for (const EulerStep& s : euler_tour(tf)) {
    const std::int64_t sign = s.down ? -2 : 2;
    for (const Pending& p : by_top[s.child]) b.add_path(p.x, p.y, sign * p.w);
    if (s.down && !t.children(s.child).empty()) {
      queries.emplace_back(s.child, b.query_subtree(s.child));
    }
  }
  PathBatch batch(rc, PathSubtreeOps(tf));
  const auto res = b.resolve(batch.evaluate(b.ops()));
  TwoCut best;
  for (const auto& [c, h] : queries) {
    if (res[h].is_inf()) continue;
    best = std::min(best, TwoCut{f_e[c] + res[h].w, {c, res[h].eid}});
  }
  return best;
}

std::vector<BipartiteProblem> generate_bipartite(const WeightedGraph& g, const RootedTree& t,
                                                 std::span<const std::int64_t> f_e) {
  const RootedTree tf = reweighted(t, f_e);
  const TreeLca lca(tf);
  const PathMinIndex mins(tf, lca);
  const auto in_tree = tree_eid_mask(g, t);

  std::vector<std::vector<std::uint32_t>> group(t.num_vertices());
  std::vector<VertexId> lcas;
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (in_tree[e.eid]) continue;
    const VertexId l = lca.lca(e.u, e.v);
    if (l == e.u || l == e.v) continue;  // descendant pair
    if (group[l].empty()) lcas.push_back(l);
    group[l].push_back(i);
  }
  std::sort(lcas.begin(), lcas.end());

  std::vector<BipartiteProblem> out(lcas.size());
  parallel_for(0, lcas.size(), [&](std::size_t k) {
    const VertexId l = lcas[k];
    std::vector<VertexId> marked{l};
    for (std::uint32_t i : group[l]) {
      marked.push_back(g.edge(i).u);
      marked.push_back(g.edge(i).v);
    }
    const CompressedTree ct = compressed_path_tree(tf, lca, mins, marked, false);
    const RootedTree& c = ct.tree;
    const auto& top = c.children(c.root());
    if (top.size() != 2) throw Error(ErrorCode::InvariantViolation, "LCA must branch in two");

    // Split the compressed tree into the two sides below its root.
    BipartiteProblem& bp = out[k];
    std::vector<std::uint8_t> side(c.num_vertices(), 0);
    std::vector<VertexId> local(c.num_vertices(), 0);
    for (int s = 0; s < 2; ++s) {
      std::vector<RootedTree::TreeEdge> edges;
      std::vector<VertexId>& label = s == 0 ? bp.label1 : bp.label2;
      label.assign(1, l);
      std::vector<VertexId> stack{top[s]};
      while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        side[v] = static_cast<std::uint8_t>(s);
        local[v] = static_cast<VertexId>(label.size());
        label.push_back(ct.label[v]);
        const VertexId p = c.parent(v) == c.root() ? 0 : local[c.parent(v)];
        edges.push_back({p, local[v], c.parent_weight(v), c.parent_eid(v)});
        for (VertexId x : c.children(v)) stack.push_back(x);
      }
      (s == 0 ? bp.t1 : bp.t2) = RootedTree(label.size(), 0, edges);
    }
    std::vector<std::pair<VertexId, VertexId>> where;  // original -> compressed
    for (VertexId v = 0; v < c.num_vertices(); ++v) where.emplace_back(ct.label[v], v);
    std::sort(where.begin(), where.end());
    auto find = [&](VertexId orig) {
      return std::lower_bound(where.begin(), where.end(), std::pair{orig, VertexId{0}})->second;
    };
    for (std::uint32_t i : group[l]) {
      VertexId a = find(g.edge(i).u), b = find(g.edge(i).v);
      if (side[a] == 1) std::swap(a, b);
      bp.crossing.push_back({local[a], local[b], -2 * static_cast<std::int64_t>(g.edge(i).w)});
    }
  });
  return out;
}

TwoCut solve_bipartite(const BipartiteProblem& bp, std::uint64_t seed) {
  const RCTree rc = build_rc_tree(bp.t1, seed);
  const std::size_t nc = rc.num_clusters();

  // Crossing edges by the cluster that owns their T1 endpoint.
  std::vector<std::vector<std::uint32_t>> at_vertex(bp.t1.num_vertices());
  for (std::uint32_t i = 0; i < bp.crossing.size(); ++i) {
    at_vertex[bp.crossing[i].a].push_back(i);
  }
  std::vector<std::vector<std::uint32_t>> owned(nc);
  for (ClusterId c = 0; c < nc; ++c) {
    const Cluster& cl = rc.cluster(c);
    if (cl.kind == ClusterKind::LeafEdge) continue;
    if (cl.kind == ClusterKind::LeafVertex) {
      owned[c] = at_vertex[cl.rep];
      continue;
    }
    rc.for_each_child(c, [&](ClusterId ch) {
      owned[c].insert(owned[c].end(), owned[ch].begin(), owned[ch].end());
    });
  }
  auto targets = [&](ClusterId c) {
    std::vector<VertexId> labs;
    for (std::uint32_t i : owned[c]) labs.push_back(bp.crossing[i].b);
    return labs;
  };

  const TreeCopy original = copy_of(bp.t2);

  struct Frame {
    ClusterId c;
    TreeCopy cur, orig;
  };
  TwoCut best;
  std::vector<Frame> stack;
  {
    auto labs = targets(rc.root());
    stack.push_back({rc.root(), original.compress(labs), original.compress(labs)});
  }
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const Cluster& cl = rc.cluster(f.c);
    if (cl.kind == ClusterKind::LeafEdge) {
      const Keyed e2 = f.cur.lightest();
      if (e2.is_inf()) continue;
      const VertexId e1 = bp.t1.parent_eid(cl.rep);
      best = std::min(best, TwoCut{bp.t1.parent_weight(cl.rep) + e2.w,
                                   {std::min(e1, e2.eid), std::max(e1, e2.eid)}});
      continue;
    }
    auto descend = [&](ClusterId x, TreeCopy cur) {
      const auto labs = targets(x);
      stack.push_back({x, cur.compress(labs), f.orig.compress(labs)});
    };
    if (cl.top != kNoCluster) {
      // Edges on the top child's cluster path lie above everything else in C.
      std::vector<std::pair<VertexId, std::int64_t>> adds;
      std::vector<std::uint8_t> in_top(bp.crossing.size(), 0);
      for (std::uint32_t i : owned[cl.top]) in_top[i] = 1;
      for (std::uint32_t i : owned[f.c]) {
        if (!in_top[i]) adds.emplace_back(bp.crossing[i].b, bp.crossing[i].w);
      }
      TreeCopy next = f.cur;
      next.add_paths(adds);
      descend(cl.top, std::move(next));
    }
    if (cl.bottom != kNoCluster) descend(cl.bottom, f.cur);
    for (ClusterId u : cl.unary_children()) descend(u, f.orig);
  }
  return best;
}

TwoCut min_2respecting(const WeightedGraph& g, const RootedTree& t, std::uint64_t seed) {
  const std::size_t n = t.num_vertices();
  if (n < 2) throw Error(ErrorCode::TrivialCut, "tree has no edges");

  // Root at a leaf and split high-degree vertices so that every vertex has at
  // most two children. Chain edges are shadowed by sentinel graph edges so no
  // cut through them can win.
  VertexId leaf = 0;
  while (t.degree(leaf) != 1) ++leaf;
  const RootedTree rerooted(n, leaf, t.edge_list());
  const EdgeId first_chain = g.max_eid() + 1;
  const TernaryTree tt = ternarize_tree(rerooted, 0, first_chain);
  const RootedTree& tr = tt.tree;
  std::vector<Edge> edges = g.edges();
  const Weight sentinel = g.total_weight() + 1;
  for (VertexId v = 0; v < tr.num_vertices(); ++v) {
    if (tt.is_chain[v]) edges.push_back({tr.parent(v), v, sentinel, tr.parent_eid(v)});
  }
  const WeightedGraph gx(tr.num_vertices(), std::move(edges));

  const auto f = f_e_weights(gx, tr, seed);
  TwoCut best;
  for (VertexId v = 0; v < tr.num_vertices(); ++v) {
    if (v != tr.root()) best = std::min(best, TwoCut{f[v], {v}});
  }
  best = std::min(best, descendant_case(gx, tr, f, seed + 1));
  const auto problems = generate_bipartite(gx, tr, f);
  std::vector<TwoCut> solved(problems.size());
  parallel_for(0, problems.size(), [&](std::size_t i) {
    solved[i] = solve_bipartite(problems[i], seed + 2 + i);
  });
  for (const TwoCut& c : solved) best = std::min(best, c);

  // Name edges by their child endpoint in the caller's tree.
  for (VertexId& c : best.edges) {
    if (tt.is_chain[c]) throw Error(ErrorCode::InvariantViolation, "chain edge won");
    const VertexId p = tt.owner[tr.parent(c)];
    c = t.parent(c) == p ? c : p;
  }
  std::sort(best.edges.begin(), best.edges.end());
  return best;
}

}  // namespace mincut
