#pragma once

#include <cstdint>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/rng.hpp"

namespace mincut {

struct ApproxCut {
  Weight value = 0;
  CutResult cut;  // side realising `value` in the input graph
};

// ceil(alpha * n^(2/k) * ln n), at least 1.
std::size_t k_approx_trials(std::size_t n, double k, double alpha = 3.0);

// Simulates weighted random contraction `trials` times with one MST, one path
// batch and one component-weight batch per trial. Returns the lightest
// component boundary seen.
ApproxCut k_approx_min_cut(const WeightedGraph& g, double k, std::size_t trials, Rng& rng);

// k = ceil(log2 n) with the matching trial count.
ApproxCut logn_approx(const WeightedGraph& g, Rng& rng, double alpha = 3.0);

// Edge positions of a scan-first search forest over the edges with
// alive[i] != 0 (all edges when alive is empty), searching from r first and
// then from every unreached vertex in id order.
std::vector<std::uint32_t> scan_first_search(const WeightedGraph& g, VertexId r,
                                             const std::vector<std::uint8_t>& alive = {});

// Per edge position: how many of the k scan-first rounds used the edge.
std::vector<Weight> certificate_counts(const WeightedGraph& g, Weight k);

// Edges weighted by certificate_counts, zero-weight edges dropped.
WeightedGraph sparse_certificate(const WeightedGraph& g, Weight k);

// Min weighted degree over successive contractions of the edges that a
// ceil(d / (2 + eps))-certificate leaves behind.
ApproxCut matula_approx(const WeightedGraph& g, double eps = 1.0);

struct ConstantApproxConfig {
  double alpha = 3.0;
  double beta = 6.0;
  double eps = 1.0;
};

// Skeleton guesses below a log n approximation, certified and run through
// Matula; the chosen guess's witness is returned with its weight in g.
ApproxCut constant_approx_min_cut(const WeightedGraph& g, Rng& rng,
                                  const ConstantApproxConfig& cfg = {});

}  // namespace mincut
