#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mincut/rc_tree.hpp"

namespace mincut::testing {

// Structural checks on an RC tree. Returns an empty string when all hold:
// disjoint-union of edge sets, one representative per composite cluster,
// boundary vertices, and the root-path decomposition for every vertex.
inline std::string check_rc_tree(const RootedTree& t, const RCTree& rc) {
  const std::size_t n = t.num_vertices();
  const std::size_t nc = rc.num_clusters();
  std::vector<std::vector<VertexId>> edges(nc), inner(nc), cpath(nc);
  std::vector<int> rep_count(n, 0);

  for (ClusterId c = 0; c < nc; ++c) {
    const Cluster& cl = rc.cluster(c);
    if (c != rc.root() && cl.parent == kNoCluster) return "orphan cluster";
    if (cl.kind == ClusterKind::LeafVertex) continue;
    if (cl.kind == ClusterKind::LeafEdge) {
      edges[c] = {cl.rep};
      cpath[c] = {cl.rep};
      continue;
    }
    if (cl.rep_leaf != rc.vertex_leaf(cl.rep)) return "representative leaf mismatch";
    ++rep_count[cl.rep];
    std::size_t total = 0;
    bool bad_child = false;
    rc.for_each_child(c, [&](ClusterId ch) {
      if (rc.cluster(ch).parent != c) bad_child = true;
      if (ch != cl.rep_leaf && rc.cluster(ch).kind == ClusterKind::LeafVertex) bad_child = true;
      edges[c].insert(edges[c].end(), edges[ch].begin(), edges[ch].end());
      inner[c].insert(inner[c].end(), inner[ch].begin(), inner[ch].end());
      total += edges[ch].size();
    });
    if (bad_child) return "child/parent link or extra vertex leaf";
    inner[c].push_back(cl.rep);
    std::sort(edges[c].begin(), edges[c].end());
    if (std::unique(edges[c].begin(), edges[c].end()) != edges[c].end() ||
        edges[c].size() != total) {
      return "children not edge-disjoint";
    }
    std::sort(inner[c].begin(), inner[c].end());
    // Boundary = endpoints of the cluster's edges that are not inside it.
    std::vector<VertexId> bnd;
    for (VertexId e : edges[c]) {
      for (VertexId x : {t.parent(e), e}) {
        if (!std::binary_search(inner[c].begin(), inner[c].end(), x)) bnd.push_back(x);
      }
    }
    std::sort(bnd.begin(), bnd.end());
    bnd.erase(std::unique(bnd.begin(), bnd.end()), bnd.end());
    std::vector<VertexId> want;
    for (VertexId b : cl.boundary) {
      if (b != kNoVertex) want.push_back(b);
    }
    std::sort(want.begin(), want.end());
    std::size_t expect = cl.kind == ClusterKind::Binary ? 2 : cl.kind == ClusterKind::Unary ? 1 : 0;
    if (bnd != want || want.size() != expect) return "boundary mismatch";
    if (cl.kind == ClusterKind::Binary) {
      cpath[c] = cpath[cl.top];
      cpath[c].insert(cpath[c].end(), cpath[cl.bottom].begin(), cpath[cl.bottom].end());
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (rep_count[v] != 1) return "vertex is not the representative of exactly one cluster";
  }
  if (edges[rc.root()].size() + 1 != n) return "root does not cover every edge";

  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> path, got;
    for (VertexId x = v; x != t.root(); x = t.parent(x)) path.push_back(x);
    ClusterId x = rc.vertex_leaf(v);
    for (ClusterId p = rc.cluster(x).parent; p != kNoCluster; x = p, p = rc.cluster(p).parent) {
      const Cluster& pc = rc.cluster(p);
      if (pc.top != kNoCluster && x != pc.top) {
        got.insert(got.end(), cpath[pc.top].begin(), cpath[pc.top].end());
      }
    }
    std::sort(path.begin(), path.end());
    std::sort(got.begin(), got.end());
    if (path != got) return "root path decomposition mismatch";
  }
  return {};
}

}  // namespace mincut::testing
