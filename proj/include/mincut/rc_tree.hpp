#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

using ClusterId = std::uint32_t;
inline constexpr ClusterId kNoCluster = std::numeric_limits<ClusterId>::max();

enum class ClusterKind : std::uint8_t { LeafVertex, LeafEdge, Unary, Binary, Nullary };

// One node of an RC tree. Composite clusters are created by a rake (unary),
// a compress (binary) or the final step on the root (nullary); `rep` is the
// vertex whose removal created them. Leaf edges are stored by the child
// endpoint of the tree edge, so `rep` of a LeafEdge is that child vertex and
// its boundaries are (parent, child).
struct Cluster {
  ClusterKind kind = ClusterKind::LeafVertex;
  VertexId rep = kNoVertex;
  std::array<VertexId, 2> boundary{kNoVertex, kNoVertex};  // top, bottom
  ClusterId rep_leaf = kNoCluster;
  ClusterId top = kNoCluster;
  ClusterId bottom = kNoCluster;
  std::array<ClusterId, 3> unary{kNoCluster, kNoCluster, kNoCluster};
  std::uint8_t num_unary = 0;
  ClusterId parent = kNoCluster;
  std::uint32_t round = 0;   // contraction round that created it
  std::uint32_t height = 0;  // leaves are 0
  std::uint32_t depth = 0;   // root is 0

  bool is_leaf() const {
    return kind == ClusterKind::LeafVertex || kind == ClusterKind::LeafEdge;
  }
  bool is_binary() const {
    return kind == ClusterKind::Binary || kind == ClusterKind::LeafEdge;
  }
  std::span<const ClusterId> unary_children() const { return {unary.data(), num_unary}; }
};

class RCTree {
 public:
  RCTree() = default;

  std::size_t num_vertices() const { return num_vertices_; }
  VertexId tree_root() const { return tree_root_; }
  ClusterId root() const { return root_; }
  const Cluster& cluster(ClusterId c) const { return clusters_[c]; }
  std::size_t num_clusters() const { return clusters_.size(); }
  const std::vector<Cluster>& clusters() const { return clusters_; }

  ClusterId vertex_leaf(VertexId v) const { return v; }
  // Leaf of the tree edge (parent(v), v). kNoCluster for the root.
  ClusterId edge_leaf(VertexId child) const { return edge_leaf_[child]; }
  // Composite cluster whose representative is v.
  ClusterId cluster_of(VertexId v) const { return clusters_[v].parent; }

  std::uint32_t height() const { return clusters_[root_].height; }
  std::uint32_t rounds() const { return clusters_[root_].round; }
  // Clusters grouped by height, leaves first.
  const std::vector<std::vector<ClusterId>>& levels() const { return levels_; }

  // Child clusters of c: representative leaf, top, bottom, unary children.
  template <class F>
  void for_each_child(ClusterId c, F&& f) const {
    const Cluster& x = clusters_[c];
    if (x.rep_leaf != kNoCluster) f(x.rep_leaf);
    if (x.top != kNoCluster) f(x.top);
    if (x.bottom != kNoCluster) f(x.bottom);
    for (ClusterId u : x.unary_children()) f(u);
  }

 private:
  friend RCTree build_rc_tree(const RootedTree& t, std::uint64_t seed);

  std::size_t num_vertices_ = 0;
  VertexId tree_root_ = 0;
  ClusterId root_ = kNoCluster;
  std::vector<Cluster> clusters_;
  std::vector<ClusterId> edge_leaf_;
  std::vector<std::vector<ClusterId>> levels_;
};

// Random-mate rake/compress contraction. Each round rakes every leaf and
// compresses the single-child vertices whose coin shows heads while their
// parent and child show tails; coins are a hash of (seed, round, vertex).
// Throws DegreeTooHigh if some vertex has degree > 3.
RCTree build_rc_tree(const RootedTree& t, std::uint64_t seed);

// Lowest common ancestor cluster of two clusters.
ClusterId rc_lca(const RCTree& rc, ClusterId a, ClusterId b);

// Euler tour + sparse table LCA over a rooted tree, with subtree intervals.
class TreeLca {
 public:
  TreeLca() = default;
  explicit TreeLca(const RootedTree& t);

  VertexId lca(VertexId u, VertexId v) const;
  std::uint32_t depth(VertexId v) const { return depth_[v]; }
  // Preorder entry/exit: subtree(v) = {x : tin(v) <= tin(x) < tout(v)}.
  std::uint32_t tin(VertexId v) const { return tin_[v]; }
  std::uint32_t tout(VertexId v) const { return tout_[v]; }
  bool is_ancestor(VertexId a, VertexId d) const {
    return tin_[a] <= tin_[d] && tin_[d] < tout_[a];
  }
  // The child of `a` on the way to its proper descendant `d`.
  VertexId child_toward(VertexId a, VertexId d) const;

 private:
  const RootedTree* tree_ = nullptr;
  std::vector<std::uint32_t> depth_, tin_, tout_, first_;
  std::vector<VertexId> tour_;
  std::vector<std::vector<VertexId>> table_;
};

struct EulerStep {
  VertexId child;  // identifies the edge (parent(child), child)
  bool down;
  friend bool operator==(const EulerStep&, const EulerStep&) = default;
};

// Edge-level Euler tour from the root; children visited in stored order.
std::vector<EulerStep> euler_tour(const RootedTree& t);

// Minimum edge weight over tree paths, ties toward the smaller edge id.
// Binary lifting; O(n log n) preprocessing.
class PathMinIndex {
 public:
  struct Entry {
    std::int64_t w;
    EdgeId eid;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  explicit PathMinIndex(const RootedTree& t, const TreeLca& lca);
  // Minimum over edges between v and its ancestor `a` (a != v).
  Entry up_min(VertexId v, VertexId a) const;

 private:
  const TreeLca* lca_;
  std::vector<std::vector<VertexId>> up_;
  std::vector<std::vector<Entry>> min_;
};

struct CompressedTree {
  RootedTree tree;
  std::vector<VertexId> label;  // compressed vertex -> original vertex
};

// Keeps the marked vertices plus branching vertices; every spliced path
// becomes one edge carrying the path minimum (and that edge's eid). With
// include_root the tree root is marked too; otherwise the result is rooted
// at the LCA of the marked set.
CompressedTree compressed_path_tree(const RootedTree& t, std::span<const VertexId> marked,
                                    bool include_root = true);
CompressedTree compressed_path_tree(const RootedTree& t, const TreeLca& lca,
                                    const PathMinIndex& mins,
                                    std::span<const VertexId> marked,
                                    bool include_root = true);

// For every (v, x): adds x to each edge on the root-to-v path. Returns the
// per-edge delta indexed by child vertex (root entry stays 0). Uses one
// bottom-up pass of subtree totals over the clusters and one top-down pass.
std::vector<std::int64_t> bulk_add_root_paths(
    const RCTree& rc, std::span<const std::pair<VertexId, std::int64_t>> updates);

}  // namespace mincut

namespace mincut {

// Splits every vertex with more than two children into a chain of copies,
// so each vertex has at most two children and degree at most three. Original
// vertices keep their ids; copies are appended. Chain edges get weight
// `chain_weight` and eids from `first_chain_eid` upward.
struct TernaryTree {
  RootedTree tree;
  std::vector<VertexId> owner;       // vertex -> original vertex
  std::vector<std::uint8_t> is_chain;  // per child vertex: parent edge is a chain edge
};

TernaryTree ternarize_tree(const RootedTree& t, std::int64_t chain_weight,
                           EdgeId first_chain_eid);

}  // namespace mincut
