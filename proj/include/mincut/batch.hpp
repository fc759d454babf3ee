#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "mincut/parallel.hpp"
#include "mincut/rc_tree.hpp"

namespace mincut {

// Values of a cluster's children at one moment of the batch. Absent children
// are null; `unary` holds the first `num_unary` entries.
template <class Value>
struct ChildView {
  const Value* rep = nullptr;
  const Value* top = nullptr;
  const Value* bottom = nullptr;
  std::array<const Value*, 3> unary{};
  std::uint8_t num_unary = 0;
};

// One operation of a batch. Timestamps must be exactly 1..k.
template <class OpSet>
struct TimestampedOp {
  std::uint32_t t = 0;
  std::variant<typename OpSet::Update, typename OpSet::Query> payload;

  bool is_query() const { return payload.index() == 1; }
};

struct BatchStats {
  std::size_t operations = 0;
  std::size_t list_entries = 0;  // non-initial entries over all clusters
  std::size_t active_clusters = 0;
};

// Evaluates batches of mixed updates and queries over an RC tree whose
// clusters carry values of a simple op-set. An op-set provides
//   Value, Update, Query, QueryState, Result
//   Value vertex_value(VertexId), Value edge_value(VertexId child)
//   void apply(Value&, const Update&)
//   Value combine(const Cluster&, const ChildView<Value>&)
//   ClusterId leaf(const RCTree&, const Update&) / (const RCTree&, const Query&)
//   QueryState start(const Query&, const Value& leaf_value)
//   void step(QueryState&, const Cluster& parent, ClusterId from, const ChildView<Value>&)
//   Result finish(const QueryState&)
// Values persist between batches; each batch starts from the previous final state.
template <class OpSet>
class BatchEvaluator {
 public:
  using Value = typename OpSet::Value;
  using Result = typename OpSet::Result;
  using Op = TimestampedOp<OpSet>;

  BatchEvaluator(const RCTree& rc, OpSet opset) : rc_(&rc), opset_(std::move(opset)) {
    values_ = initial_values();
  }

  const OpSet& opset() const { return opset_; }
  const Value& value(ClusterId c) const { return values_[c]; }
  const BatchStats& last_stats() const { return stats_; }

  // Recomputes every composite value from the current leaf values.
  std::vector<Value> recompute() const {
    std::vector<Value> vals(values_.size());
    for (ClusterId c = 0; c < vals.size(); ++c) {
      const Cluster& cl = rc_->cluster(c);
      if (cl.is_leaf()) {
        vals[c] = values_[c];
      } else {
        vals[c] = opset_.combine(cl, view_of(c, [&](ClusterId ch) { return &vals[ch]; }));
      }
    }
    return vals;
  }

  // Results of the queries, in the order the queries appear in `ops`.
  std::vector<Result> evaluate(std::span<const Op> ops);

 private:
  static constexpr std::uint32_t kNoQuery = 0xffffffffu;

  struct Entry {
    std::uint32_t t;
    Value v;
    std::uint32_t query;
  };

  std::vector<Value> initial_values() const {
    std::vector<Value> vals(rc_->num_clusters());
    for (ClusterId c = 0; c < vals.size(); ++c) {
      const Cluster& cl = rc_->cluster(c);
      if (cl.kind == ClusterKind::LeafVertex) {
        vals[c] = opset_.vertex_value(cl.rep);
      } else if (cl.kind == ClusterKind::LeafEdge) {
        vals[c] = opset_.edge_value(cl.rep);
      } else {
        vals[c] = opset_.combine(cl, view_of(c, [&](ClusterId ch) { return &vals[ch]; }));
      }
    }
    return vals;
  }

  template <class Get>
  ChildView<Value> view_of(ClusterId c, Get&& get) const {
    const Cluster& cl = rc_->cluster(c);
    ChildView<Value> view;
    if (cl.rep_leaf != kNoCluster) view.rep = get(cl.rep_leaf);
    if (cl.top != kNoCluster) view.top = get(cl.top);
    if (cl.bottom != kNoCluster) view.bottom = get(cl.bottom);
    view.num_unary = cl.num_unary;
    for (std::uint8_t i = 0; i < cl.num_unary; ++i) view.unary[i] = get(cl.unary[i]);
    return view;
  }

  const RCTree* rc_;
  OpSet opset_;
  std::vector<Value> values_;
  BatchStats stats_;
};

template <class OpSet>
auto BatchEvaluator<OpSet>::evaluate(std::span<const Op> ops) -> std::vector<Result> {
  const std::size_t k = ops.size();
  stats_ = BatchStats{k, 0, 0};
  if (k == 0) return {};

  std::vector<std::uint8_t> seen(k + 1, 0);
  for (const Op& op : ops) {
    if (op.t == 0 || op.t > k || seen[op.t]) {
      throw Error(ErrorCode::BadTimestamps, "timestamps must be a permutation of 1..k");
    }
    seen[op.t] = 1;
  }

  std::vector<ClusterId> leaf(k);
  std::vector<std::uint32_t> qidx(k, kNoQuery);
  std::uint32_t num_queries = 0;
  for (std::size_t i = 0; i < k; ++i) {
    leaf[i] = std::visit([&](const auto& p) { return opset_.leaf(*rc_, p); }, ops[i].payload);
    if (leaf[i] >= rc_->num_clusters() || !rc_->cluster(leaf[i]).is_leaf()) {
      throw Error(ErrorCode::NoSuchLeaf, "operation refers to an unknown leaf");
    }
    if (ops[i].is_query()) qidx[i] = num_queries++;
  }

  std::vector<std::uint32_t> order(k);
  for (std::uint32_t i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return leaf[a] != leaf[b] ? leaf[a] < leaf[b] : ops[a].t < ops[b].t;
  });
  std::vector<std::size_t> group_start;
  for (std::size_t i = 0; i < k; ++i) {
    if (i == 0 || leaf[order[i]] != leaf[order[i - 1]]) group_start.push_back(i);
  }
  group_start.push_back(k);

  // Steps 1-3: per-leaf prefix application and query initialisation.
  std::vector<std::vector<Entry>> lists(rc_->num_clusters());
  std::vector<typename OpSet::QueryState> states(num_queries);
  std::vector<std::uint32_t> entries(rc_->num_clusters(), 0);
  parallel_for(0, group_start.size() - 1, [&](std::size_t g) {
    ClusterId c = leaf[order[group_start[g]]];
    auto& list = lists[c];
    list.reserve(group_start[g + 1] - group_start[g] + 1);
    list.push_back({0, values_[c], kNoQuery});
    for (std::size_t i = group_start[g]; i < group_start[g + 1]; ++i) {
      const Op& op = ops[order[i]];
      Value v = list.back().v;
      if (const auto* upd = std::get_if<0>(&op.payload)) {
        opset_.apply(v, *upd);
        list.push_back({op.t, std::move(v), kNoQuery});
      } else {
        std::uint32_t q = qidx[order[i]];
        states[q] = opset_.start(std::get<1>(op.payload), v);
        list.push_back({op.t, std::move(v), q});
      }
    }
    entries[c] = static_cast<std::uint32_t>(list.size() - 1);
  });

  // Clusters with a non-trivial operation list: ancestors of touched leaves.
  std::vector<std::uint8_t> active(rc_->num_clusters(), 0);
  std::vector<std::vector<ClusterId>> by_height(rc_->height() + 1);
  for (std::size_t g = 0; g + 1 < group_start.size(); ++g) {
    ClusterId c = leaf[order[group_start[g]]];
    active[c] = 1;
    for (ClusterId p = rc_->cluster(c).parent; p != kNoCluster && !active[p];
         p = rc_->cluster(p).parent) {
      active[p] = 1;
      by_height[rc_->cluster(p).height].push_back(p);
    }
  }

  // Step 4-5: level-synchronous merge of the children's operation lists.
  for (std::uint32_t h = 1; h < by_height.size(); ++h) {
    auto& level = by_height[h];
    parallel_for(0, level.size(), [&](std::size_t i) {
      const ClusterId c = level[i];
      const Cluster& cl = rc_->cluster(c);
      std::array<ClusterId, 6> kids{};
      std::size_t nk = 0;
      rc_->for_each_child(c, [&](ClusterId ch) { kids[nk++] = ch; });

      struct Event {
        std::uint32_t t;
        std::uint8_t slot;
        std::uint32_t idx;
      };
      std::vector<Event> events;
      std::array<const Value*, 6> cur{};
      for (std::size_t s = 0; s < nk; ++s) {
        const auto& lst = lists[kids[s]];
        if (active[kids[s]]) {
          cur[s] = &lst.front().v;
          for (std::uint32_t j = 1; j < lst.size(); ++j) {
            events.push_back({lst[j].t, static_cast<std::uint8_t>(s), j});
          }
        } else {
          cur[s] = &values_[kids[s]];
        }
      }
      std::sort(events.begin(), events.end(),
                [](const Event& a, const Event& b) { return a.t < b.t; });

      auto slot_of = [&](ClusterId ch) {
        return static_cast<std::size_t>(std::find(kids.begin(), kids.begin() + nk, ch) -
                                        kids.begin());
      };
      auto view = view_of(c, [&](ClusterId ch) { return cur[slot_of(ch)]; });
      auto& out = lists[c];
      out.reserve(events.size() + 1);
      out.push_back({0, values_[c], kNoQuery});
      for (const Event& e : events) {
        const Entry& src = lists[kids[e.slot]][e.idx];
        cur[e.slot] = &src.v;
        view = view_of(c, [&](ClusterId ch) { return cur[slot_of(ch)]; });
        if (src.query != kNoQuery) opset_.step(states[src.query], cl, kids[e.slot], view);
        out.push_back({e.t, opset_.combine(cl, view), src.query});
      }
      entries[c] = static_cast<std::uint32_t>(events.size());
      for (std::size_t s = 0; s < nk; ++s) {
        if (!active[kids[s]]) continue;
        auto& lst = lists[kids[s]];
        values_[kids[s]] = lst.back().v;
        std::vector<Entry>().swap(lst);
      }
    });
  }

  const ClusterId root = rc_->root();
  stats_.active_clusters = 0;
  for (ClusterId c = 0; c < active.size(); ++c) stats_.active_clusters += active[c];
  for (std::uint32_t e : entries) stats_.list_entries += e;
  values_[root] = lists[root].back().v;

  std::vector<Result> results(num_queries);
  parallel_for(0, num_queries, [&](std::size_t q) { results[q] = opset_.finish(states[q]); });
  return results;
}

}  // namespace mincut
