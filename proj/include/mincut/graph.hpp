#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "mincut/error.hpp"

namespace mincut {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 1;
  EdgeId eid = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph on vertices 0..n-1 with positive integer weights.
// Parallel edges are kept apart by their stable `eid`. Immutable once built.
class WeightedGraph {
 public:
  struct Incidence {
    VertexId neighbor;
    std::uint32_t edge;  // position in edges()
  };

  WeightedGraph() = default;
  // Validates endpoints, weights and eid uniqueness. Self-loops are rejected;
  // use `contract` if loops may arise.
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  // Convenience: eids assigned 0..m-1 in order.
  static WeightedGraph from_triples(
      std::size_t n,
      std::span<const std::tuple<VertexId, VertexId, Weight>> triples);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::span<const Incidence> incident(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  Weight weighted_degree(VertexId v) const;
  Weight total_weight() const { return total_weight_; }
  EdgeId max_eid() const;

  bool is_connected() const;
  // Component label per vertex, labels dense from 0 in order of first vertex.
  std::vector<std::uint32_t> component_labels() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Incidence> adj_;
  Weight total_weight_ = 0;
};

// Rooted tree on vertices 0..n-1. Every edge is stored at its child endpoint:
// the edge (parent(v), v) has weight parent_weight(v) and id parent_eid(v).
// Weights are signed because several algorithms store derived costs on trees.
class RootedTree {
 public:
  struct TreeEdge {
    VertexId u;
    VertexId v;
    std::int64_t w;
    EdgeId eid;
  };

  RootedTree() = default;
  // Orients an undirected edge list away from `root`. Throws Disconnected if
  // the edges do not form a spanning tree.
  RootedTree(std::size_t n, VertexId root, std::span<const TreeEdge> edges);

  std::size_t num_vertices() const { return parent_.size(); }
  VertexId root() const { return root_; }
  VertexId parent(VertexId v) const { return parent_[v]; }
  std::int64_t parent_weight(VertexId v) const { return parent_weight_[v]; }
  EdgeId parent_eid(VertexId v) const { return parent_eid_[v]; }
  const std::vector<VertexId>& children(VertexId v) const { return children_[v]; }
  std::size_t degree(VertexId v) const {
    return children_[v].size() + (v == root_ ? 0 : 1);
  }
  std::size_t max_degree() const;
  bool is_ternary() const { return max_degree() <= 3; }
  // Vertices in BFS order from the root; parents precede children.
  const std::vector<VertexId>& top_down_order() const { return order_; }
  std::vector<TreeEdge> edge_list() const;

  void set_parent_weight(VertexId v, std::int64_t w) { parent_weight_[v] = w; }

 private:
  VertexId root_ = 0;
  std::vector<VertexId> parent_;
  std::vector<std::int64_t> parent_weight_;
  std::vector<EdgeId> parent_eid_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<VertexId> order_;
};

struct CutWitness {
  std::size_t tree = 0;
  std::vector<EdgeId> edges;  // one or two tree edge ids
};

struct CutResult {
  std::vector<std::uint8_t> side;  // 1 = inside S
  Weight weight = 0;
  std::optional<CutWitness> witness;
};

struct Ternarized {
  WeightedGraph graph;
  std::vector<VertexId> owner;                   // new vertex -> original
  std::vector<std::vector<VertexId>> expansion;  // original -> new vertices
  Weight sentinel = 0;                           // weight of cycle edges
};

struct Contracted {
  WeightedGraph graph;
  std::vector<VertexId> map;  // original vertex -> contracted vertex
};

// Replaces every vertex of degree > 3 with a cycle of sentinel-weight edges
// (sentinel = total weight + 1). Original edges keep their eids; cycle edges
// get fresh eids above the largest one.
Ternarized ternarize(const WeightedGraph& g);

// One vertex per distinct label (dense ids in order of first appearance).
// Self-loops are dropped; parallel edges and their eids are kept.
Contracted contract(const WeightedGraph& g, std::span<const std::uint32_t> labels);

// Throws TrivialCut when one side is empty.
Weight cut_weight(const WeightedGraph& g, std::span<const std::uint8_t> side);

// Edge positions of a minimum spanning forest under `key` (ties broken by
// eid), in the order Kruskal accepts them.
std::vector<std::uint32_t> kruskal_order(const WeightedGraph& g,
                                         std::span<const std::uint64_t> key);

// Spanning tree minimising `key`, rooted at vertex 0. Throws Disconnected.
RootedTree minimum_spanning_tree(const WeightedGraph& g,
                                 std::span<const std::uint64_t> key);

// Builds a rooted tree from edge positions of `g`.
RootedTree tree_from_edges(const WeightedGraph& g,
                           std::span<const std::uint32_t> edge_positions,
                           VertexId root = 0);

WeightedGraph read_dimacs(std::string_view text);
std::string write_dimacs(const WeightedGraph& g);
WeightedGraph read_dimacs_file(const std::string& path);

}  // namespace mincut
