#include "mincut/component_ops.hpp"

namespace mincut {

auto ComponentWeightOps::combine(const Cluster& c, const ChildView<Value>& view) const
    -> Value {
  std::int64_t hang = view.rep->top;  // representative plus unary children
  for (std::uint8_t i = 0; i < view.num_unary; ++i) hang += view.unary[i]->top;
  const Value* t = view.top;
  const Value* b = view.bottom;
  switch (c.kind) {
    case ClusterKind::Unary:
      if (!t->joined) return {false, t->top, 0};
      return {false, t->top + hang, 0};
    case ClusterKind::Binary:
      if (t->joined && b->joined) return {true, t->top + b->top + hang, 0};
      if (b->joined) return {false, t->top, t->bottom + hang + b->top};
      if (t->joined) return {false, t->top + hang + b->top, b->bottom};
      return {false, t->top, b->bottom};
    case ClusterKind::Nullary:
      return {false, hang, 0};
    default:
      throw Error(ErrorCode::InvariantViolation, "combine on a leaf");
  }
}

ClusterId ComponentWeightOps::leaf(const RCTree& rc, const Update& u) const {
  if (u.target >= rc.num_vertices()) return kNoCluster;
  return u.kind == Update::Kind::Subtract ? rc.vertex_leaf(u.target) : rc.edge_leaf(u.target);
}

ClusterId ComponentWeightOps::leaf(const RCTree& rc, const Query& q) const {
  return q.v < rc.num_vertices() ? rc.vertex_leaf(q.v) : kNoCluster;
}

void ComponentWeightOps::step(QueryState& s, const Cluster& p, ClusterId,
                              const ChildView<Value>& view) const {
  if (s.done || p.rep != s.target) return;
  const Value* t = view.top;
  const Value* b = view.bottom;
  // A joined top or bottom child links the target to a boundary vertex, which
  // represents some ancestor cluster; continue the climb from there.
  if (t && t->joined) {
    s.target = p.boundary[0];
    return;
  }
  if (b && b->joined) {
    s.target = p.boundary[1];
    return;
  }
  std::int64_t total = view.rep->top;
  for (std::uint8_t i = 0; i < view.num_unary; ++i) total += view.unary[i]->top;
  if (t) total += t->bottom;
  if (b) total += b->top;
  s.result = total;
  s.done = true;
}

}  // namespace mincut
