#pragma once

#include <cstdint>
#include <vector>

#include "mincut/approx_cut.hpp"
#include "mincut/graph.hpp"
#include "mincut/rng.hpp"

namespace mincut {

struct PackingConfig {
  ConstantApproxConfig approx;
  double gamma = 3.0;  // skeleton density: p = gamma * ceil(log2 n) / c
  double delta = 2.0;  // sampled trees: ceil(delta * log2 n)
};

// Spanning trees of a multigraph with per-edge load (times used) counters.
struct Packing {
  std::vector<std::vector<std::uint32_t>> trees;  // edge positions, one list per round
  std::vector<std::uint64_t> load;                // per edge position
  std::size_t rounds = 0;
};

// `rounds` minimum spanning trees under key load / multiplicity (compared
// exactly, ties by eid), each raising the load of its edges by one.
Packing pack_greedy(const WeightedGraph& skeleton, std::size_t rounds);

struct PackingReport {
  Weight approx_cut = 0;   // constant-factor estimate used for the skeleton
  double p = 1.0;          // sampling probability actually used
  std::size_t rounds = 0;
  std::size_t skeleton_vertices = 0;
};

// Spanning trees of g such that a minimum cut 2-respects one of them w.h.p.
// tree_count 0 means ceil(delta * log2 n). Throws SkeletonDisconnected when
// the skeleton is disconnected even after one retry at doubled p.
std::vector<RootedTree> pack_trees(const WeightedGraph& g, Rng& rng, std::size_t tree_count = 0,
                                   const PackingConfig& cfg = {},
                                   PackingReport* report = nullptr);

}  // namespace mincut
