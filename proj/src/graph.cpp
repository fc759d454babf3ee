#include "mincut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "mincut/union_find.hpp"

namespace mincut {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  std::unordered_set<EdgeId> seen;
  seen.reserve(edges_.size());
  std::vector<std::uint32_t> deg(n_ + 1, 0);
  for (const Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw Error(ErrorCode::InvariantViolation, "edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::InvariantViolation, "self-loop");
    }
    if (e.w == 0) {
      throw Error(ErrorCode::InvariantViolation, "edge weight must be >= 1");
    }
    if (!seen.insert(e.eid).second) {
      throw Error(ErrorCode::InvariantViolation, "duplicate edge id");
    }
    if (total_weight_ > std::numeric_limits<Weight>::max() - e.w) {
      throw Error(ErrorCode::InvariantViolation, "total weight overflows");
    }
    total_weight_ += e.w;
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n_]);
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[fill[e.u]++] = {e.v, i};
    adj_[fill[e.v]++] = {e.u, i};
  }
}

WeightedGraph WeightedGraph::from_triples(
    std::size_t n,
    std::span<const std::tuple<VertexId, VertexId, Weight>> triples) {
  std::vector<Edge> edges;
  edges.reserve(triples.size());
  EdgeId id = 0;
  for (const auto& [u, v, w] : triples) edges.push_back({u, v, w, id++});
  return WeightedGraph(n, std::move(edges));
}

Weight WeightedGraph::weighted_degree(VertexId v) const {
  Weight d = 0;
  for (const Incidence& inc : incident(v)) d += edges_[inc.edge].w;
  return d;
}

EdgeId WeightedGraph::max_eid() const {
  EdgeId best = 0;
  for (const Edge& e : edges_) best = std::max(best, e.eid);
  return best;
}

std::vector<std::uint32_t> WeightedGraph::component_labels() const {
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(n_, kUnset);
  std::uint32_t next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n_; ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : incident(x)) {
        if (label[inc.neighbor] == kUnset) {
          label[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return label;
}

bool WeightedGraph::is_connected() const {
  if (n_ <= 1) return true;
  auto label = component_labels();
  return std::all_of(label.begin(), label.end(),
                     [](std::uint32_t l) { return l == 0; });
}

RootedTree::RootedTree(std::size_t n, VertexId root,
                       std::span<const TreeEdge> edges)
    : root_(root),
      parent_(n, kNoVertex),
      parent_weight_(n, 0),
      parent_eid_(n, kNoEdge),
      children_(n) {
  if (root >= n) throw Error(ErrorCode::InvariantViolation, "root out of range");
  if (edges.size() + 1 != n) {
    throw Error(ErrorCode::Disconnected, "a spanning tree needs n-1 edges");
  }
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    if (edges[i].u >= n || edges[i].v >= n || edges[i].u == edges[i].v) {
      throw Error(ErrorCode::InvariantViolation, "bad tree edge");
    }
    adj[edges[i].u].push_back(i);
    adj[edges[i].v].push_back(i);
  }
  std::vector<std::uint8_t> seen(n, 0);
  order_.reserve(n);
  order_.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < order_.size(); ++head) {
    VertexId x = order_[head];
    for (std::uint32_t i : adj[x]) {
      const TreeEdge& e = edges[i];
      VertexId y = e.u == x ? e.v : e.u;
      if (seen[y]) continue;
      seen[y] = 1;
      parent_[y] = x;
      parent_weight_[y] = e.w;
      parent_eid_[y] = e.eid;
      children_[x].push_back(y);
      order_.push_back(y);
    }
  }
  if (order_.size() != n) {
    throw Error(ErrorCode::Disconnected, "tree edges do not span the vertices");
  }
}

std::size_t RootedTree::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < parent_.size(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<RootedTree::TreeEdge> RootedTree::edge_list() const {
  std::vector<TreeEdge> out;
  out.reserve(parent_.size());
  for (VertexId v : order_) {
    if (v == root_) continue;
    out.push_back({parent_[v], v, parent_weight_[v], parent_eid_[v]});
  }
  return out;
}

Ternarized ternarize(const WeightedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2 || !g.is_connected()) {
    throw Error(ErrorCode::Disconnected, "ternarize needs a connected graph with n >= 2");
  }
  Ternarized out;
  out.sentinel = g.total_weight() + 1;
  out.expansion.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    std::size_t copies = g.degree(v) > 3 ? g.degree(v) : 1;
    for (std::size_t i = 0; i < copies; ++i) {
      out.expansion[v].push_back(static_cast<VertexId>(out.owner.size()));
      out.owner.push_back(v);
    }
  }
  // Hand out cycle slots to incident edges in incidence order.
  std::vector<std::uint32_t> next_slot(n, 0);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges() + n);
  std::vector<VertexId> end_u(g.num_edges()), end_v(g.num_edges());
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& inc : g.incident(v)) {
      VertexId slot = out.expansion[v][out.expansion[v].size() == 1 ? 0 : next_slot[v]++];
      (g.edge(inc.edge).u == v ? end_u : end_v)[inc.edge] = slot;
    }
  }
  for (std::uint32_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    edges.push_back({end_u[i], end_v[i], e.w, e.eid});
  }
  EdgeId next_eid = g.max_eid() + 1;
  for (VertexId v = 0; v < n; ++v) {
    const auto& cyc = out.expansion[v];
    if (cyc.size() == 1) continue;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      edges.push_back({cyc[i], cyc[(i + 1) % cyc.size()], out.sentinel, next_eid++});
    }
  }
  out.graph = WeightedGraph(out.owner.size(), std::move(edges));
  return out;
}

Contracted contract(const WeightedGraph& g, std::span<const std::uint32_t> labels) {
  const std::size_t n = g.num_vertices();
  if (labels.size() != n) {
    throw Error(ErrorCode::InvariantViolation, "label count differs from vertex count");
  }
  Contracted out;
  out.map.assign(n, kNoVertex);
  std::vector<std::pair<std::uint32_t, VertexId>> sorted;
  sorted.reserve(n);
  for (VertexId v = 0; v < n; ++v) sorted.emplace_back(labels[v], v);
  std::sort(sorted.begin(), sorted.end());
  // Dense ids in order of each label's first vertex.
  std::vector<std::pair<VertexId, std::uint32_t>> firsts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i].first != sorted[i - 1].first) {
      firsts.emplace_back(sorted[i].second, sorted[i].first);
    }
  }
  std::sort(firsts.begin(), firsts.end());
  std::vector<std::pair<std::uint32_t, VertexId>> label_to_id;
  for (VertexId id = 0; id < firsts.size(); ++id) {
    label_to_id.emplace_back(firsts[id].second, id);
  }
  std::sort(label_to_id.begin(), label_to_id.end());
  for (VertexId v = 0; v < n; ++v) {
    auto it = std::lower_bound(label_to_id.begin(), label_to_id.end(),
                               std::make_pair(labels[v], VertexId{0}));
    out.map[v] = it->second;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    VertexId a = out.map[e.u], b = out.map[e.v];
    if (a == b) continue;
    edges.push_back({a, b, e.w, e.eid});
  }
  out.graph = WeightedGraph(firsts.size(), std::move(edges));
  return out;
}

Weight cut_weight(const WeightedGraph& g, std::span<const std::uint8_t> side) {
  if (side.size() != g.num_vertices()) {
    throw Error(ErrorCode::InvariantViolation, "side vector has wrong length");
  }
  std::size_t inside = std::count_if(side.begin(), side.end(),
                                     [](std::uint8_t s) { return s != 0; });
  if (inside == 0 || inside == side.size()) {
    throw Error(ErrorCode::TrivialCut, "both sides must be nonempty");
  }
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    if ((side[e.u] != 0) != (side[e.v] != 0)) total += e.w;
  }
  return total;
}

std::vector<std::uint32_t> kruskal_order(const WeightedGraph& g,
                                         std::span<const std::uint64_t> key) {
  if (key.size() != g.num_edges()) {
    throw Error(ErrorCode::InvariantViolation, "one key per edge required");
  }
  std::vector<std::uint32_t> idx(g.num_edges());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (key[a] != key[b]) return key[a] < key[b];
    return g.edge(a).eid < g.edge(b).eid;
  });
  UnionFind uf(g.num_vertices());
  std::vector<std::uint32_t> chosen;
  chosen.reserve(g.num_vertices());
  for (std::uint32_t i : idx) {
    if (uf.unite(g.edge(i).u, g.edge(i).v)) chosen.push_back(i);
  }
  return chosen;
}

RootedTree tree_from_edges(const WeightedGraph& g,
                           std::span<const std::uint32_t> edge_positions,
                           VertexId root) {
  std::vector<RootedTree::TreeEdge> edges;
  edges.reserve(edge_positions.size());
  for (std::uint32_t i : edge_positions) {
    const Edge& e = g.edge(i);
    edges.push_back({e.u, e.v, static_cast<std::int64_t>(e.w), e.eid});
  }
  return RootedTree(g.num_vertices(), root, edges);
}

RootedTree minimum_spanning_tree(const WeightedGraph& g,
                                 std::span<const std::uint64_t> key) {
  if (g.num_vertices() == 0) throw Error(ErrorCode::Disconnected, "empty graph");
  auto chosen = kruskal_order(g, key);
  if (chosen.size() + 1 != g.num_vertices()) {
    throw Error(ErrorCode::Disconnected, "graph is not connected");
  }
  return tree_from_edges(g, chosen, 0);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": expected an integer, got '" +
                    std::string(tok) + "'");
  }
  return value;
}

}  // namespace

WeightedGraph read_dimacs(std::string_view text) {
  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
    };
    if (tok[0] == "p") {
      if (have_header) fail("duplicate header");
      if (tok.size() != 4 || tok[1] != "max") fail("expected 'p max <n> <m>'");
      n = parse_u64(tok[2], line_no);
      m = parse_u64(tok[3], line_no);
      have_header = true;
      edges.reserve(m);
    } else if (tok[0] == "e") {
      if (!have_header) fail("edge before header");
      if (tok.size() != 4) fail("expected 'e <u> <v> <w>'");
      std::uint64_t u = parse_u64(tok[1], line_no);
      std::uint64_t v = parse_u64(tok[2], line_no);
      std::uint64_t w = parse_u64(tok[3], line_no);
      if (u < 1 || u > n || v < 1 || v > n) fail("vertex id out of range");
      if (u == v) fail("self-loop");
      if (w == 0) fail("weight must be positive");
      edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), w,
                       static_cast<EdgeId>(edges.size())});
    } else {
      fail("unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'p max' header");
  if (edges.size() != m) {
    throw Error(ErrorCode::ParseError, "header announces " + std::to_string(m) +
                                           " edges, found " + std::to_string(edges.size()));
  }
  return WeightedGraph(n, std::move(edges));
}

std::string write_dimacs(const WeightedGraph& g) {
  std::string out = "p max " + std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " +
           std::to_string(e.w) + "\n";
  }
  return out;
}

WeightedGraph read_dimacs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_dimacs(buf.str());
}

}  // namespace mincut
