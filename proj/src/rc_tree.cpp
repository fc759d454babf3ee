#include "mincut/rc_tree.hpp"

#include <algorithm>
#include <bit>

#include "mincut/parallel.hpp"
#include "mincut/rng.hpp"

namespace mincut {

RCTree build_rc_tree(const RootedTree& t, std::uint64_t seed) {
  const std::size_t n = t.num_vertices();
  if (n == 0) throw Error(ErrorCode::InvariantViolation, "empty tree");
  if (t.max_degree() > 3) {
    throw Error(ErrorCode::DegreeTooHigh, "RC trees need max degree <= 3");
  }
  const VertexId root = t.root();
  RCTree rc;
  rc.num_vertices_ = n;
  rc.tree_root_ = root;
  auto& cl = rc.clusters_;
  cl.reserve(3 * n);
  for (VertexId v = 0; v < n; ++v) {
    Cluster c;
    c.kind = ClusterKind::LeafVertex;
    c.rep = v;
    cl.push_back(c);
  }
  rc.edge_leaf_.assign(n, kNoCluster);
  for (VertexId v = 0; v < n; ++v) {
    if (v == root) continue;
    Cluster c;
    c.kind = ClusterKind::LeafEdge;
    c.rep = v;
    c.boundary = {t.parent(v), v};
    rc.edge_leaf_[v] = static_cast<ClusterId>(cl.size());
    cl.push_back(c);
  }

  std::vector<VertexId> par(n);
  std::vector<ClusterId> up(rc.edge_leaf_);
  std::vector<std::vector<VertexId>> kids(n);
  std::vector<std::vector<ClusterId>> raked(n);
  std::vector<VertexId> alive;
  for (VertexId v = 0; v < n; ++v) {
    par[v] = t.parent(v);
    kids[v] = t.children(v);
    if (v != root) alive.push_back(v);
  }

  auto attach = [&](ClusterId id) {
    rc.for_each_child(id, [&](ClusterId ch) { cl[ch].parent = id; });
  };
  auto set_unaries = [&](Cluster& c, const std::vector<ClusterId>& us) {
    c.num_unary = static_cast<std::uint8_t>(us.size());
    std::copy(us.begin(), us.end(), c.unary.begin());
  };

  enum Action : std::uint8_t { kKeep, kRake, kCompress };
  std::vector<std::uint8_t> action;
  std::uint32_t round = 0;
  while (!alive.empty()) {
    ++round;
    auto candidate = [&](VertexId x) {
      return x != root && kids[x].size() == 1 && !kids[kids[x][0]].empty();
    };
    auto heads = [&](VertexId x) { return (counter_hash(seed, round, x) & 1) != 0; };
    action.assign(alive.size(), kKeep);
    parallel_for(0, alive.size(), [&](std::size_t i) {
      VertexId v = alive[i];
      if (kids[v].empty()) {
        action[i] = kRake;
      } else if (candidate(v) && heads(v)) {
        VertexId p = par[v], c = kids[v][0];
        bool parent_blocks = candidate(p) && heads(p);
        bool child_blocks = candidate(c) && heads(c);
        if (!parent_blocks && !child_blocks) action[i] = kCompress;
      }
    }, 256);

    std::vector<VertexId> next;
    next.reserve(alive.size());
    for (std::size_t i = 0; i < alive.size(); ++i) {
      VertexId v = alive[i];
      if (action[i] == kKeep) {
        next.push_back(v);
        continue;
      }
      VertexId p = par[v];
      Cluster c;
      c.rep = v;
      c.rep_leaf = v;
      c.top = up[v];
      c.round = round;
      set_unaries(c, raked[v]);
      auto& siblings = kids[p];
      auto pos = std::find(siblings.begin(), siblings.end(), v);
      if (action[i] == kRake) {
        c.kind = ClusterKind::Unary;
        c.boundary = {p, kNoVertex};
        auto id = static_cast<ClusterId>(cl.size());
        cl.push_back(c);
        attach(id);
        raked[p].push_back(id);
        siblings.erase(pos);
      } else {
        VertexId child = kids[v][0];
        c.kind = ClusterKind::Binary;
        c.bottom = up[child];
        c.boundary = {p, child};
        auto id = static_cast<ClusterId>(cl.size());
        cl.push_back(c);
        attach(id);
        par[child] = p;
        up[child] = id;
        *pos = child;
      }
    }
    alive.swap(next);
  }

  Cluster top;
  top.kind = ClusterKind::Nullary;
  top.rep = root;
  top.rep_leaf = root;
  top.round = round + 1;
  set_unaries(top, raked[root]);
  rc.root_ = static_cast<ClusterId>(cl.size());
  cl.push_back(top);
  attach(rc.root_);

  // Children always precede parents in creation order.
  for (ClusterId id = 0; id < cl.size(); ++id) {
    std::uint32_t h = 0;
    bool any = false;
    rc.for_each_child(id, [&](ClusterId ch) {
      h = std::max(h, cl[ch].height);
      any = true;
    });
    cl[id].height = any ? h + 1 : 0;
  }
  for (ClusterId id = static_cast<ClusterId>(cl.size()); id-- > 0;) {
    cl[id].depth = cl[id].parent == kNoCluster ? 0 : cl[cl[id].parent].depth + 1;
  }
  rc.levels_.assign(cl[rc.root_].height + 1, {});
  for (ClusterId id = 0; id < cl.size(); ++id) rc.levels_[cl[id].height].push_back(id);
  return rc;
}

ClusterId rc_lca(const RCTree& rc, ClusterId a, ClusterId b) {
  while (rc.cluster(a).depth > rc.cluster(b).depth) a = rc.cluster(a).parent;
  while (rc.cluster(b).depth > rc.cluster(a).depth) b = rc.cluster(b).parent;
  while (a != b) {
    a = rc.cluster(a).parent;
    b = rc.cluster(b).parent;
  }
  return a;
}

TreeLca::TreeLca(const RootedTree& t) : tree_(&t) {
  const std::size_t n = t.num_vertices();
  depth_.assign(n, 0);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  first_.assign(n, 0);
  tour_.reserve(2 * n);
  std::uint32_t clock = 0;
  // (vertex, next child index)
  std::vector<std::pair<VertexId, std::size_t>> stack{{t.root(), 0}};
  tin_[t.root()] = clock++;
  first_[t.root()] = 0;
  tour_.push_back(t.root());
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < t.children(v).size()) {
      VertexId c = t.children(v)[i++];
      depth_[c] = depth_[v] + 1;
      tin_[c] = clock++;
      first_[c] = static_cast<std::uint32_t>(tour_.size());
      tour_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      tout_[v] = clock;
      stack.pop_back();
      if (!stack.empty()) tour_.push_back(stack.back().first);
    }
  }
  const std::size_t len = tour_.size();
  const int levels = std::bit_width(len);
  table_.assign(levels, {});
  table_[0] = tour_;
  for (int k = 1; k < levels; ++k) {
    const std::size_t span = std::size_t{1} << k;
    table_[k].resize(len - span + 1);
    for (std::size_t i = 0; i + span <= len; ++i) {
      VertexId a = table_[k - 1][i], b = table_[k - 1][i + span / 2];
      table_[k][i] = depth_[a] <= depth_[b] ? a : b;
    }
  }
}

VertexId TreeLca::lca(VertexId u, VertexId v) const {
  std::size_t l = first_[u], r = first_[v];
  if (l > r) std::swap(l, r);
  const int k = std::bit_width(r - l + 1) - 1;
  VertexId a = table_[k][l], b = table_[k][r + 1 - (std::size_t{1} << k)];
  return depth_[a] <= depth_[b] ? a : b;
}

VertexId TreeLca::child_toward(VertexId a, VertexId d) const {
  const auto& ch = tree_->children(a);
  // Children were numbered in stored order, so their tin values increase.
  auto it = std::upper_bound(ch.begin(), ch.end(), tin_[d],
                             [&](std::uint32_t x, VertexId c) { return x < tin_[c]; });
  return *(it - 1);
}

std::vector<EulerStep> euler_tour(const RootedTree& t) {
  std::vector<EulerStep> out;
  out.reserve(2 * t.num_vertices());
  std::vector<std::pair<VertexId, std::size_t>> stack{{t.root(), 0}};
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < t.children(v).size()) {
      VertexId c = t.children(v)[i++];
      out.push_back({c, true});
      stack.emplace_back(c, 0);
    } else {
      VertexId done = v;
      stack.pop_back();
      if (!stack.empty()) out.push_back({done, false});
    }
  }
  return out;
}

PathMinIndex::PathMinIndex(const RootedTree& t, const TreeLca& lca) : lca_(&lca) {
  const std::size_t n = t.num_vertices();
  std::uint32_t max_depth = 0;
  for (VertexId v = 0; v < n; ++v) max_depth = std::max(max_depth, lca.depth(v));
  const int levels = std::max(1, static_cast<int>(std::bit_width(max_depth)));
  up_.assign(levels, std::vector<VertexId>(n));
  min_.assign(levels, std::vector<Entry>(n));
  for (VertexId v = 0; v < n; ++v) {
    up_[0][v] = v == t.root() ? v : t.parent(v);
    min_[0][v] = {t.parent_weight(v), t.parent_eid(v)};
  }
  for (int k = 1; k < levels; ++k) {
    for (VertexId v = 0; v < n; ++v) {
      VertexId mid = up_[k - 1][v];
      up_[k][v] = up_[k - 1][mid];
      min_[k][v] = std::min(min_[k - 1][v], min_[k - 1][mid]);
    }
  }
}

PathMinIndex::Entry PathMinIndex::up_min(VertexId v, VertexId a) const {
  std::uint32_t steps = lca_->depth(v) - lca_->depth(a);
  Entry best{std::numeric_limits<std::int64_t>::max(), kNoEdge};
  for (int k = 0; steps != 0; ++k, steps >>= 1) {
    if (steps & 1) {
      best = std::min(best, min_[k][v]);
      v = up_[k][v];
    }
  }
  return best;
}

CompressedTree compressed_path_tree(const RootedTree& t, const TreeLca& lca,
                                    const PathMinIndex& mins,
                                    std::span<const VertexId> marked,
                                    bool include_root) {
  std::vector<VertexId> keep(marked.begin(), marked.end());
  if (include_root) keep.push_back(t.root());
  if (keep.empty()) throw Error(ErrorCode::InvariantViolation, "nothing marked");
  auto by_tin = [&](VertexId a, VertexId b) { return lca.tin(a) < lca.tin(b); };
  std::sort(keep.begin(), keep.end(), by_tin);
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  const std::size_t k = keep.size();
  for (std::size_t i = 0; i + 1 < k; ++i) keep.push_back(lca.lca(keep[i], keep[i + 1]));
  std::sort(keep.begin(), keep.end(), by_tin);
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<RootedTree::TreeEdge> edges;
  edges.reserve(keep.size());
  std::vector<VertexId> stack;  // positions into keep
  for (VertexId i = 0; i < keep.size(); ++i) {
    while (!stack.empty() && !lca.is_ancestor(keep[stack.back()], keep[i])) stack.pop_back();
    if (!stack.empty()) {
      auto m = mins.up_min(keep[i], keep[stack.back()]);
      edges.push_back({stack.back(), i, m.w, m.eid});
    }
    stack.push_back(i);
  }
  return {RootedTree(keep.size(), 0, edges), std::move(keep)};
}

CompressedTree compressed_path_tree(const RootedTree& t, std::span<const VertexId> marked,
                                    bool include_root) {
  TreeLca lca(t);
  PathMinIndex mins(t, lca);
  return compressed_path_tree(t, lca, mins, marked, include_root);
}

std::vector<std::int64_t> bulk_add_root_paths(
    const RCTree& rc, std::span<const std::pair<VertexId, std::int64_t>> updates) {
  const std::size_t nc = rc.num_clusters();
  std::vector<std::int64_t> total(nc, 0);
  for (const auto& [v, x] : updates) total[rc.vertex_leaf(v)] += x;
  // Bottom-up: W(C) = sum over children (edge leaves carry no vertices).
  for (ClusterId id = 0; id < nc; ++id) {
    if (rc.cluster(id).is_leaf()) continue;
    std::int64_t s = 0;
    rc.for_each_child(id, [&](ClusterId ch) { s += total[ch]; });
    total[id] = s;
  }
  // Top-down: incoming[C] is added to every edge of C's cluster path by
  // vertices outside C. Descending into C.t adds everything in C but C.t.
  std::vector<std::int64_t> incoming(nc, 0);
  for (ClusterId id = static_cast<ClusterId>(nc); id-- > 0;) {
    const Cluster& c = rc.cluster(id);
    if (c.is_leaf()) continue;
    if (c.top != kNoCluster) incoming[c.top] = incoming[id] + total[id] - total[c.top];
    if (c.bottom != kNoCluster) incoming[c.bottom] = incoming[id];
  }
  std::vector<std::int64_t> delta(rc.num_vertices(), 0);
  for (VertexId v = 0; v < rc.num_vertices(); ++v) {
    if (rc.edge_leaf(v) != kNoCluster) delta[v] = incoming[rc.edge_leaf(v)];
  }
  return delta;
}

}  // namespace mincut

namespace mincut {

TernaryTree ternarize_tree(const RootedTree& t, std::int64_t chain_weight,
                           EdgeId first_chain_eid) {
  const std::size_t n = t.num_vertices();
  TernaryTree out;
  out.owner.resize(n);
  for (VertexId v = 0; v < n; ++v) out.owner[v] = v;
  std::vector<RootedTree::TreeEdge> edges;
  std::vector<VertexId> chain_child;
  EdgeId next_eid = first_chain_eid;
  for (VertexId v = 0; v < n; ++v) {
    const auto& kids = t.children(v);
    VertexId at = v;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const VertexId c = kids[i];
      // Copies take one child each; the last copy takes the final two.
      if (kids.size() > 2 && i > 0 && i + 1 < kids.size()) {
        auto copy = static_cast<VertexId>(out.owner.size());
        out.owner.push_back(v);
        edges.push_back({at, copy, chain_weight, next_eid++});
        chain_child.push_back(copy);
        at = copy;
      }
      edges.push_back({at, c, t.parent_weight(c), t.parent_eid(c)});
    }
  }
  out.tree = RootedTree(out.owner.size(), t.root(), edges);
  out.is_chain.assign(out.owner.size(), 0);
  for (VertexId c : chain_child) out.is_chain[c] = 1;
  return out;
}

}  // namespace mincut
