#include "mincut/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "mincut/union_find.hpp"

namespace mincut {

std::pair<Weight, CutResult> stoer_wagner(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw Error(ErrorCode::TrivialCut, "minimum cut needs two vertices");
  if (!g.is_connected()) {
    auto labels = g.component_labels();
    CutResult r;
    r.side.resize(n);
    for (VertexId v = 0; v < n; ++v) r.side[v] = labels[v] == 0;
    return {0, r};
  }
  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, 0));
  for (const Edge& e : g.edges()) {
    w[e.u][e.v] += e.w;
    w[e.v][e.u] += e.w;
  }
  std::vector<std::vector<VertexId>> members(n);
  for (VertexId v = 0; v < n; ++v) members[v] = {v};
  std::vector<VertexId> alive(n);
  std::iota(alive.begin(), alive.end(), 0);

  Weight best = std::numeric_limits<Weight>::max();
  std::vector<VertexId> best_side;
  while (alive.size() > 1) {
    std::vector<Weight> conn(n, 0);
    std::vector<std::uint8_t> added(n, 0);
    VertexId prev = alive[0], last = alive[0];
    for (std::size_t step = 0; step < alive.size(); ++step) {
      VertexId pick = kNoVertex;
      for (VertexId v : alive) {
        if (!added[v] && (pick == kNoVertex || conn[v] > conn[pick])) pick = v;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      for (VertexId v : alive) conn[v] += w[pick][v];
    }
    Weight phase = 0;
    for (VertexId v : alive) {
      if (v != last) phase += w[last][v];
    }
    if (phase < best) {
      best = phase;
      best_side = members[last];
    }
    for (VertexId v : alive) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0;
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  CutResult r;
  r.side.assign(n, 0);
  for (VertexId v : best_side) r.side[v] = 1;
  r.weight = best;
  return {best, r};
}

std::pair<Weight, CutResult> enumerate_cuts(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 20) throw Error(ErrorCode::TooLarge, "enumeration limited to n <= 20");
  if (n < 2) throw Error(ErrorCode::TrivialCut, "minimum cut needs two vertices");
  // Vertex n-1 stays outside; Gray code over the others.
  std::vector<std::uint8_t> side(n, 0);
  Weight cur = 0, best = std::numeric_limits<Weight>::max();
  std::uint32_t best_code = 0;
  const std::uint32_t total = std::uint32_t{1} << (n - 1);
  for (std::uint32_t i = 1; i < total; ++i) {
    const auto flip = static_cast<VertexId>(std::countr_zero(i));
    for (const auto& inc : g.incident(flip)) {
      const Weight ew = g.edge(inc.edge).w;
      if (side[inc.neighbor] == side[flip]) {
        cur += ew;
      } else {
        cur -= ew;
      }
    }
    side[flip] ^= 1;
    if (cur < best) {
      best = cur;
      best_code = i ^ (i >> 1);
    }
  }
  CutResult r;
  r.side.assign(n, 0);
  for (VertexId v = 0; v + 1 < n; ++v) r.side[v] = (best_code >> v) & 1;
  r.weight = best;
  return {best, r};
}

namespace {

template <class Op>
std::vector<std::size_t> by_timestamp(std::span<const Op> ops) {
  std::vector<std::size_t> order(ops.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ops[a].t < ops[b].t; });
  return order;
}

template <class Op>
std::vector<std::size_t> query_slots(std::span<const Op> ops) {
  std::vector<std::size_t> slot(ops.size(), 0);
  std::size_t q = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].is_query()) slot[i] = q++;
  }
  return slot;
}

}  // namespace

std::vector<Keyed> sequential_replay(const RootedTree& t, std::span<const PathOp> ops) {
  const std::size_t n = t.num_vertices();
  std::vector<std::int64_t> w(n);
  std::vector<std::uint32_t> depth(n, 0);
  for (VertexId v : t.top_down_order()) {
    w[v] = t.parent_weight(v);
    if (v != t.root()) depth[v] = depth[t.parent(v)] + 1;
  }
  auto key = [&](VertexId c) { return Keyed{w[c], t.parent_eid(c)}; };

  const auto slot = query_slots(ops);
  std::size_t num_queries = 0;
  for (const auto& op : ops) num_queries += op.is_query();
  std::vector<Keyed> out(num_queries);
  for (std::size_t i : by_timestamp(ops)) {
    if (const auto* add = std::get_if<0>(&ops[i].payload)) {
      for (VertexId v = add->v; v != t.root(); v = t.parent(v)) w[v] += add->x;
      continue;
    }
    const auto& q = std::get<1>(ops[i].payload);
    Keyed best;
    if (const auto* s = std::get_if<PathSubtreeOps::QuerySubtree>(&q)) {
      std::vector<VertexId> stack(t.children(s->v).begin(), t.children(s->v).end());
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        best = kmin(best, key(v));
        for (VertexId c : t.children(v)) stack.push_back(c);
      }
    } else if (const auto* e = std::get_if<PathSubtreeOps::QueryEdge>(&q)) {
      best = key(e->child);
    } else {
      const auto& p = std::get<PathSubtreeOps::QueryPath>(q);
      VertexId a = p.u, b = p.v;
      while (a != b) {
        if (depth[a] < depth[b]) std::swap(a, b);
        best = kmin(best, key(a));
        a = t.parent(a);
      }
    }
    out[slot[i]] = best;
  }
  return out;
}

std::vector<std::int64_t> sequential_replay(const RootedTree& t,
                                            std::span<const std::int64_t> vertex_weight,
                                            std::span<const ComponentOp> ops) {
  const std::size_t n = t.num_vertices();
  UnionFind uf(n);
  std::vector<std::int64_t> total(vertex_weight.begin(), vertex_weight.end());
  const auto slot = query_slots(ops);
  std::size_t num_queries = 0;
  for (const auto& op : ops) num_queries += op.is_query();
  std::vector<std::int64_t> out(num_queries);
  using Kind = ComponentWeightOps::Update::Kind;
  for (std::size_t i : by_timestamp(ops)) {
    if (const auto* u = std::get_if<0>(&ops[i].payload)) {
      if (u->kind == Kind::Subtract) {
        total[uf.find(u->target)] -= u->x;
      } else {
        VertexId a = uf.find(u->target), b = uf.find(t.parent(u->target));
        if (a != b) {
          std::int64_t sum = total[a] + total[b];
          uf.unite(a, b);
          total[uf.find(a)] = sum;
        }
      }
    } else {
      out[slot[i]] = total[uf.find(std::get<1>(ops[i].payload).v)];
    }
  }
  return out;
}

TwoCut brute_2respecting(const WeightedGraph& g, const RootedTree& t) {
  const std::size_t n = t.num_vertices();
  TreeLca lca(t);
  std::vector<VertexId> kids;
  for (VertexId v = 0; v < n; ++v) {
    if (v != t.root()) kids.push_back(v);
  }
  auto cut_of = [&](VertexId a, VertexId b) {
    std::int64_t s = 0;
    for (const Edge& e : g.edges()) {
      bool in_u = lca.is_ancestor(a, e.u) != (b != kNoVertex && lca.is_ancestor(b, e.u));
      bool in_v = lca.is_ancestor(a, e.v) != (b != kNoVertex && lca.is_ancestor(b, e.v));
      if (in_u != in_v) s += static_cast<std::int64_t>(e.w);
    }
    return s;
  };
  TwoCut best;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    best = std::min(best, TwoCut{cut_of(kids[i], kNoVertex), {kids[i]}});
    for (std::size_t j = i + 1; j < kids.size(); ++j) {
      best = std::min(best, TwoCut{cut_of(kids[i], kids[j]), {kids[i], kids[j]}});
    }
  }
  return best;
}

}  // namespace mincut
