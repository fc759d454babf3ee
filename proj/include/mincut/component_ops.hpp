#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mincut/batch.hpp"

namespace mincut {

// SubtractWeight(v, x), JoinEdge(e) and QueryWeight(v) over a vertex-weighted
// tree whose edges start unjoined. QueryWeight returns the total weight of
// v's component under the joined edges.
class ComponentWeightOps {
 public:
  // Vertex leaves and unary clusters use `top` only. Binary clusters and edge
  // leaves are either joined (`top` = total) or split (component weights
  // hanging off the top and bottom boundary).
  struct Value {
    bool joined = false;
    std::int64_t top = 0;
    std::int64_t bottom = 0;
    friend bool operator==(const Value&, const Value&) = default;
  };
  struct Update {
    enum class Kind : std::uint8_t { Subtract, Join } kind;
    VertexId target;  // vertex, or child endpoint of the edge
    std::int64_t x = 0;
  };
  struct QueryWeight {
    VertexId v;
  };
  using Query = QueryWeight;
  using Result = std::int64_t;

  struct QueryState {
    VertexId target = kNoVertex;
    bool done = false;
    std::int64_t result = 0;
  };

  ComponentWeightOps() = default;
  // `joined` (optional, per child vertex) marks edges joined from the start.
  explicit ComponentWeightOps(std::vector<std::int64_t> vertex_weight,
                              std::vector<std::uint8_t> joined = {})
      : weight_(std::move(vertex_weight)), joined_(std::move(joined)) {}

  static Update subtract(VertexId v, std::int64_t x) {
    return {Update::Kind::Subtract, v, x};
  }
  static Update join(VertexId child) { return {Update::Kind::Join, child, 0}; }

  Value vertex_value(VertexId v) const { return {false, weight_[v], 0}; }
  Value edge_value(VertexId child) const {
    return {!joined_.empty() && joined_[child] != 0, 0, 0};
  }
  void apply(Value& v, const Update& u) const {
    if (u.kind == Update::Kind::Subtract) {
      v.top -= u.x;
    } else {
      v.joined = true;
    }
  }
  Value combine(const Cluster& c, const ChildView<Value>& view) const;

  ClusterId leaf(const RCTree& rc, const Update& u) const;
  ClusterId leaf(const RCTree& rc, const Query& q) const;

  QueryState start(const Query& q, const Value&) const { return {q.v, false, 0}; }
  void step(QueryState& s, const Cluster& p, ClusterId from,
            const ChildView<Value>& view) const;
  Result finish(const QueryState& s) const { return s.result; }

 private:
  std::vector<std::int64_t> weight_;
  std::vector<std::uint8_t> joined_;
};

using ComponentBatch = BatchEvaluator<ComponentWeightOps>;
using ComponentOp = TimestampedOp<ComponentWeightOps>;

}  // namespace mincut
