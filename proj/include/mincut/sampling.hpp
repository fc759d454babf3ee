#pragma once

#include <cstdint>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/rng.hpp"

namespace mincut {

// Probability in [0, 1] as a 64-bit binary fraction (value = bits / 2^64),
// with an explicit flag for exactly 1.
struct Probability {
  std::uint64_t bits = 0;
  bool is_one = false;

  static Probability one() { return {0, true}; }
  static Probability zero() { return {0, false}; }
  // Rounds down to the nearest multiple of 2^-64. Throws BadProbability.
  static Probability from_double(double p);
  double to_double() const;
  Probability halved() const;
  bool is_zero() const { return !is_one && bits == 0; }
  friend bool operator==(const Probability&, const Probability&) = default;
};

std::uint64_t binom_half(std::uint64_t n, Rng& rng);
std::uint64_t binom_p(std::uint64_t n, Probability p, Rng& rng);

// Edge positions ordered by exponential race keys -ln(U)/w, ties by eid.
std::vector<std::uint32_t> weighted_permutation(const WeightedGraph& g, Rng& rng);

// Each unit of weight kept independently with probability p. The graph has
// the same vertices; edges keep their eids and carry the sampled multiplicity;
// zero-multiplicity edges are omitted.
struct Skeleton {
  WeightedGraph graph;
  Probability p;
};

Skeleton skeleton(const WeightedGraph& g, Probability p, Rng& rng);

// skeleton(g, p) followed by k successive halvings of every multiplicity.
std::vector<Skeleton> subsample_chain(const WeightedGraph& g, Probability p, std::size_t k,
                                      Rng& rng);

struct LowWeightGraph {
  WeightedGraph graph;
  Weight scale = 1;
  std::vector<VertexId> map;  // vertex of g -> vertex of graph
  bool degenerate = false;    // transform skipped; graph is g itself
};

// Contracts edges heavier than c_tilde, then scales by
// s = max(1, ceil(c_tilde / (2 m ceil(log2 n)))): edges below s are dropped and
// the rest become floor(w / s). When that would leave a single vertex or a
// disconnected graph, returns g unchanged with s = 1 and `degenerate` set.
LowWeightGraph low_weight_transform(const WeightedGraph& g, Weight c_tilde);

// ceil(log2 n), at least 1.
std::uint32_t ceil_log2(std::size_t n);

}  // namespace mincut
