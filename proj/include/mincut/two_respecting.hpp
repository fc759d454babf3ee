#pragma once

#include <cstdint>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/rc_tree.hpp"

namespace mincut {

// A cut crossing one or two tree edges, each named by its child endpoint.
struct TwoCut {
  std::int64_t value = std::numeric_limits<std::int64_t>::max();
  std::vector<VertexId> edges;

  bool operator<(const TwoCut& o) const {
    return value != o.value ? value < o.value : edges < o.edges;
  }
};

// Vertices below an odd number of the cut's tree edges.
std::vector<std::uint8_t> two_cut_side(const RootedTree& t, const TwoCut& cut);

// w(F_e) per tree edge, indexed by child vertex: the weight of graph edges
// whose tree path uses e. One batch of add_path calls and edge queries.
std::vector<std::int64_t> f_e_weights(const WeightedGraph& g, const RootedTree& t,
                                      std::uint64_t seed = 0);

// Crossing-edge problem between two subtrees hanging below a common vertex.
// Vertex 0 of each tree is its root (the shared vertex's copy); `label` maps
// tree vertices to vertices of the original tree.
struct BipartiteProblem {
  RootedTree t1, t2;
  std::vector<VertexId> label1, label2;
  struct Crossing {
    VertexId a;  // vertex of t1
    VertexId b;  // vertex of t2
    std::int64_t w;
  };
  std::vector<Crossing> crossing;
};

// Best pair of edges, where one lies strictly below the other.
TwoCut descendant_case(const WeightedGraph& g, const RootedTree& t,
                       std::span<const std::int64_t> f_e, std::uint64_t seed = 0);

// One problem per vertex that is the LCA of non-tree edges whose endpoints
// lie below two different children. Tree edge weights are w(F_e) minima.
std::vector<BipartiteProblem> generate_bipartite(const WeightedGraph& g, const RootedTree& t,
                                                 std::span<const std::int64_t> f_e);

// Min over e1 in t1, e2 in t2 of w(e1) + w(e2) + crossing weight between the
// subtrees below them. Edges are reported through the labels (child vertex
// in the original tree; edge weights carry the argmin edge id).
TwoCut solve_bipartite(const BipartiteProblem& bp, std::uint64_t seed = 0);

// Minimum cut of g that crosses at most two edges of t. Trees with vertices
// of degree above three are handled internally.
TwoCut min_2respecting(const WeightedGraph& g, const RootedTree& t, std::uint64_t seed = 0);

}  // namespace mincut
