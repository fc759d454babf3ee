#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "mincut/batch.hpp"

namespace mincut {

// Edge weight tagged with the edge that realises it; ordered by (w, eid).
struct Keyed {
  static constexpr std::int64_t kInf = std::int64_t{1} << 62;

  std::int64_t w = kInf;
  EdgeId eid = kNoEdge;

  bool is_inf() const { return w >= kInf; }
  Keyed plus(std::int64_t x) const { return is_inf() ? *this : Keyed{w + x, eid}; }
  friend auto operator<=>(const Keyed&, const Keyed&) = default;
};

inline Keyed kmin(Keyed a, Keyed b) { return b < a ? b : a; }

// AddPath'(v, x), QuerySubtree(v), QueryEdge(e) and QueryPath'(u, v) over a
// rooted tree with signed edge weights. Binary clusters keep the minimum off
// the cluster path (m), the minimum on it (l) counting only additions made
// inside the cluster, and the total addition inside (w).
class PathSubtreeOps {
 public:
  struct Value {
    Keyed m;
    Keyed l;
    std::int64_t w = 0;
    friend bool operator==(const Value&, const Value&) = default;
  };
  struct AddPath {
    VertexId v;
    std::int64_t x;
  };
  struct QuerySubtree {
    VertexId v;
  };
  struct QueryEdge {
    VertexId child;
  };
  struct QueryPath {
    VertexId u;
    VertexId v;  // representative of an RC ancestor of u's leaf
  };
  using Update = AddPath;
  using Query = std::variant<QuerySubtree, QueryEdge, QueryPath>;
  using Result = Keyed;

  struct QueryState {
    enum class Mode : std::uint8_t { Subtree, Edge, Path, PathTail, Done };
    Mode mode = Mode::Done;
    VertexId target = kNoVertex;
    Keyed m, a, b;  // Subtree: a = on-path min. Path: a = to top, b = to bottom.
    Keyed result;
  };

  PathSubtreeOps() = default;
  explicit PathSubtreeOps(const RootedTree& t);

  Value vertex_value(VertexId) const { return {}; }
  Value edge_value(VertexId child) const {
    return {Keyed{}, Keyed{weight_[child], eid_[child]}, 0};
  }
  void apply(Value& v, const Update& u) const { v.w += u.x; }
  Value combine(const Cluster& c, const ChildView<Value>& view) const;

  ClusterId leaf(const RCTree& rc, const Update& u) const;
  ClusterId leaf(const RCTree& rc, const Query& q) const;

  QueryState start(const Query& q, const Value& leaf_value) const;
  void step(QueryState& s, const Cluster& p, ClusterId from,
            const ChildView<Value>& view) const;
  Result finish(const QueryState& s) const { return s.result; }

 private:
  std::vector<std::int64_t> weight_;
  std::vector<EdgeId> eid_;
};

using PathBatch = BatchEvaluator<PathSubtreeOps>;
using PathOp = TimestampedOp<PathSubtreeOps>;

// Builds batches of the composite operations add_path(u, v, x) and
// query_path(u, v) by expanding them into AddPath' / QueryPath' calls, and
// maps raw query results back to one result per requested query.
class PathOpBuilder {
 public:
  PathOpBuilder(const RCTree& rc, const TreeLca& lca) : rc_(&rc), lca_(&lca) {}

  void add_path_prime(VertexId v, std::int64_t x);
  void add_path(VertexId u, VertexId v, std::int64_t x);
  std::size_t query_edge(VertexId child);
  std::size_t query_subtree(VertexId v);
  std::size_t query_path(VertexId u, VertexId v);

  const std::vector<PathOp>& ops() const { return ops_; }
  std::size_t num_queries() const { return handles_.size(); }
  std::vector<Keyed> resolve(const std::vector<Keyed>& raw) const;

 private:
  std::uint32_t push_query(PathSubtreeOps::Query q);

  const RCTree* rc_;
  const TreeLca* lca_;
  std::vector<PathOp> ops_;
  std::uint32_t raw_queries_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> handles_;
};

}  // namespace mincut
