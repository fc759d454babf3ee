#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mincut/component_ops.hpp"
#include "mincut/graph.hpp"
#include "mincut/path_ops.hpp"
#include "mincut/two_respecting.hpp"

namespace mincut {

// Exact global minimum cut, O(n^3). A disconnected graph yields 0 and one of
// its components as the side.
std::pair<Weight, CutResult> stoer_wagner(const WeightedGraph& g);

// Minimum over all proper cuts by Gray-code enumeration. Throws TooLarge for n > 20.
std::pair<Weight, CutResult> enumerate_cuts(const WeightedGraph& g);

// One-at-a-time execution of a batch by direct tree walks, in timestamp order.
// Results follow the order of the queries in `ops`.
std::vector<Keyed> sequential_replay(const RootedTree& t, std::span<const PathOp> ops);
std::vector<std::int64_t> sequential_replay(const RootedTree& t,
                                            std::span<const std::int64_t> vertex_weight,
                                            std::span<const ComponentOp> ops);

// Minimum over all one- and two-edge subsets of t's edges.
TwoCut brute_2respecting(const WeightedGraph& g, const RootedTree& t);

}  // namespace mincut
