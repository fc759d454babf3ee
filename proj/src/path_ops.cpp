#include "mincut/path_ops.hpp"

namespace mincut {

namespace {

using Value = PathSubtreeOps::Value;

struct UnarySummary {
  Keyed m;
  std::int64_t w = 0;
};

UnarySummary summarize_unary(const ChildView<Value>& view) {
  UnarySummary s;
  for (std::uint8_t i = 0; i < view.num_unary; ++i) {
    s.m = kmin(s.m, view.unary[i]->m);
    s.w += view.unary[i]->w;
  }
  return s;
}

}  // namespace

PathSubtreeOps::PathSubtreeOps(const RootedTree& t)
    : weight_(t.num_vertices()), eid_(t.num_vertices()) {
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    weight_[v] = t.parent_weight(v);
    eid_[v] = t.parent_eid(v);
  }
}

auto PathSubtreeOps::combine(const Cluster& c, const ChildView<Value>& view) const -> Value {
  const UnarySummary u = summarize_unary(view);
  const std::int64_t vw = view.rep->w;
  Value out;
  switch (c.kind) {
    case ClusterKind::Unary: {
      const std::int64_t wp = vw + u.w;
      out.m = kmin(kmin(view.top->m, view.top->l.plus(wp)), u.m);
      out.w = view.top->w + wp;
      break;
    }
    case ClusterKind::Binary: {
      const std::int64_t wp = vw + view.bottom->w + u.w;
      out.m = kmin(kmin(view.top->m, view.bottom->m), u.m);
      out.l = kmin(view.top->l.plus(wp), view.bottom->l);
      out.w = view.top->w + wp;
      break;
    }
    case ClusterKind::Nullary:
      out.m = u.m;
      out.w = vw + u.w;
      break;
    default:
      throw Error(ErrorCode::InvariantViolation, "combine on a leaf");
  }
  return out;
}

ClusterId PathSubtreeOps::leaf(const RCTree& rc, const Update& u) const {
  return u.v < rc.num_vertices() ? rc.vertex_leaf(u.v) : kNoCluster;
}

ClusterId PathSubtreeOps::leaf(const RCTree& rc, const Query& q) const {
  const std::size_t n = rc.num_vertices();
  if (const auto* s = std::get_if<QuerySubtree>(&q)) {
    return s->v < n ? rc.vertex_leaf(s->v) : kNoCluster;
  }
  if (const auto* e = std::get_if<QueryEdge>(&q)) {
    return e->child < n ? rc.edge_leaf(e->child) : kNoCluster;
  }
  const auto& p = std::get<QueryPath>(q);
  if (p.u >= n || p.v >= n) return kNoCluster;
  for (ClusterId c = rc.cluster_of(p.u); c != kNoCluster; c = rc.cluster(c).parent) {
    if (rc.cluster(c).rep == p.v) return rc.vertex_leaf(p.u);
  }
  throw Error(ErrorCode::NotAnAncestorRep,
              "QueryPath' needs v to represent an RC ancestor of u");
}

auto PathSubtreeOps::start(const Query& q, const Value& leaf_value) const -> QueryState {
  QueryState s;
  if (const auto* sub = std::get_if<QuerySubtree>(&q)) {
    s.mode = QueryState::Mode::Subtree;
    s.target = sub->v;
  } else if (std::holds_alternative<QueryEdge>(q)) {
    s.mode = QueryState::Mode::Edge;
    s.a = leaf_value.l;
  } else {
    s.mode = QueryState::Mode::Path;
    s.target = std::get<QueryPath>(q).v;
  }
  return s;
}

void PathSubtreeOps::step(QueryState& s, const Cluster& p, ClusterId from,
                          const ChildView<Value>& view) const {
  using Mode = QueryState::Mode;
  if (s.mode == Mode::Done) return;
  const UnarySummary u = summarize_unary(view);
  const std::int64_t vw = view.rep->w;
  const bool binary = p.kind == ClusterKind::Binary;
  const bool from_top = from == p.top;
  const bool from_bottom = from == p.bottom;
  const bool from_rep = from == p.rep_leaf;
  // Additions made inside p below its representative.
  const std::int64_t below_rep = vw + u.w + (binary ? view.bottom->w : 0);

  switch (s.mode) {
    case Mode::Subtree:
      if (binary) {
        if (from_top || from_rep) {
          s.a = kmin(s.a.plus(below_rep), view.bottom->l);
          s.m = kmin(kmin(s.m, view.bottom->m), u.m);
        }
      } else {
        s.result = kmin(kmin(s.a.plus(below_rep), s.m), u.m);
        s.mode = Mode::Done;
      }
      return;

    case Mode::Edge:
      if (from_top) {
        s.a = s.a.plus(below_rep);
        if (!binary) {
          s.result = s.a;
          s.mode = Mode::Done;
        }
      }
      return;

    case Mode::Path:
      if (p.rep == s.target) {
        if (from_top) {
          s.a = s.b;
        } else if (!from_bottom) {
          s.result = s.m;
          s.mode = Mode::Done;
          return;
        }
        // The remaining path edges lie on the cluster path of `from`; their
        // weight still lacks additions made below p's bottom boundary.
        s.mode = Mode::PathTail;
        break;
      }
      if (p.kind == ClusterKind::Nullary) {
        throw Error(ErrorCode::InvariantViolation, "QueryPath' target not on the root path");
      }
      if (!binary) {
        s.m = from_top ? kmin(s.m, s.a.plus(below_rep))
                       : kmin(s.m, view.top->l.plus(below_rep));
        s.a = s.b = Keyed{};
      } else if (from_top) {
        s.a = s.a.plus(below_rep);
        s.b = kmin(s.b.plus(below_rep), view.bottom->l);
      } else if (from_bottom) {
        s.a = kmin(s.a, view.top->l.plus(below_rep));
      } else {
        s.a = view.top->l.plus(below_rep);
        s.b = view.bottom->l;
      }
      return;

    default:
      break;
  }

  // PathTail: `a` holds the still-open path segment.
  if (from_top) {
    s.a = s.a.plus(below_rep);
    if (!binary) {
      s.result = kmin(s.m, s.a);
      s.mode = Mode::Done;
    }
  } else if (!from_bottom) {
    s.result = kmin(s.m, s.a);
    s.mode = Mode::Done;
  }
}

void PathOpBuilder::add_path_prime(VertexId v, std::int64_t x) {
  ops_.push_back({static_cast<std::uint32_t>(ops_.size() + 1), PathSubtreeOps::AddPath{v, x}});
}

void PathOpBuilder::add_path(VertexId u, VertexId v, std::int64_t x) {
  if (u == v || x == 0) return;
  add_path_prime(u, x);
  add_path_prime(v, x);
  add_path_prime(lca_->lca(u, v), -2 * x);
}

std::uint32_t PathOpBuilder::push_query(PathSubtreeOps::Query q) {
  ops_.push_back({static_cast<std::uint32_t>(ops_.size() + 1), std::move(q)});
  return raw_queries_++;
}

std::size_t PathOpBuilder::query_edge(VertexId child) {
  handles_.emplace_back(push_query(PathSubtreeOps::QueryEdge{child}), kNoVertex);
  return handles_.size() - 1;
}

std::size_t PathOpBuilder::query_subtree(VertexId v) {
  handles_.emplace_back(push_query(PathSubtreeOps::QuerySubtree{v}), kNoVertex);
  return handles_.size() - 1;
}

std::size_t PathOpBuilder::query_path(VertexId u, VertexId v) {
  if (u == v) throw Error(ErrorCode::EmptyPath, "query_path needs distinct endpoints");
  const VertexId x = rc_->cluster(rc_lca(*rc_, rc_->vertex_leaf(u), rc_->vertex_leaf(v))).rep;
  std::uint32_t first = kNoVertex, second = kNoVertex;
  if (x != u) first = push_query(PathSubtreeOps::QueryPath{u, x});
  if (x != v) second = push_query(PathSubtreeOps::QueryPath{v, x});
  handles_.emplace_back(first, second);
  return handles_.size() - 1;
}

std::vector<Keyed> PathOpBuilder::resolve(const std::vector<Keyed>& raw) const {
  std::vector<Keyed> out(handles_.size());
  for (std::size_t i = 0; i < handles_.size(); ++i) {
    const auto [a, b] = handles_[i];
    if (a != kNoVertex) out[i] = kmin(out[i], raw[a]);
    if (b != kNoVertex) out[i] = kmin(out[i], raw[b]);
  }
  return out;
}

}  // namespace mincut
