#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamkit/vertex_set.hpp"

namespace hamkit {

struct GraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Input is outside the independence class an operation accepts.
struct ClassError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// Connectivity, endpoint or membership requirement violated.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u;
  Vertex v;
  bool operator==(const Edge&) const = default;
};

using VertexPath = std::vector<Vertex>;

// Vertex-disjoint paths; paths[i] starts at the i-th requested vertex.
struct PathCover {
  std::vector<VertexPath> paths;
  bool operator==(const PathCover&) const = default;
};

// Immutable simple undirected graph on vertices 0..n-1. Keeps both bitset
// rows and sorted neighbour lists.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.rows_.assign(n, VertexSet(n));
    for (const auto& e : edges) {
      if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n || static_cast<std::size_t>(e.v) >= n)
        throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + "-" + std::to_string(e.v));
      if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
      if (g.rows_[static_cast<std::size_t>(e.u)].contains(e.v)) continue;  // duplicates collapse
      g.rows_[static_cast<std::size_t>(e.u)].insert(e.v);
      g.rows_[static_cast<std::size_t>(e.v)].insert(e.u);
      ++g.edge_count_;
    }
    g.build_lists();
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    return from_edges(n, std::span<const Edge>(edges));
  }
  // Rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<VertexSet> rows) {
    Graph g;
    g.rows_ = std::move(rows);
    std::size_t deg = 0;
    for (std::size_t v = 0; v < g.rows_.size(); ++v) {
      if (g.rows_[v].contains(static_cast<Vertex>(v))) throw GraphError("self-loop in adjacency rows");
      deg += g.rows_[v].size();
    }
    g.edge_count_ = deg / 2;
    g.build_lists();
    return g;
  }

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& row(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    auto i = static_cast<std::size_t>(v);
    return {lists_.data() + offsets_[i], lists_.data() + offsets_[i + 1]};
  }
  std::size_t degree(Vertex v) const {
    auto i = static_cast<std::size_t>(v);
    return offsets_[i + 1] - offsets_[i];
  }
  VertexSet vertices() const { return VertexSet::full(order()); }
  bool has_vertex(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.push_back({u, v});
    return out;
  }

 private:
  void build_lists() {
    offsets_.assign(rows_.size() + 1, 0);
    lists_.clear();
    lists_.reserve(edge_count_ * 2);
    for (std::size_t v = 0; v < rows_.size(); ++v) {
      for (Vertex w : rows_[v]) lists_.push_back(w);
      offsets_[v + 1] = lists_.size();
    }
  }

  std::vector<VertexSet> rows_;
  std::vector<Vertex> lists_;
  std::vector<std::size_t> offsets_{0};
  std::size_t edge_count_ = 0;
};

// Single-owner accumulator for a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n) {}
  GraphBuilder& add_edge(Vertex u, Vertex v) {
    edges_.push_back({u, v});
    return *this;
  }
  Graph build() const { return Graph::from_edges(n_, edges_); }
  std::size_t order() const { return n_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

// Induced subgraph as a live view: the parent graph restricted to `alive`.
// Holds a pointer to the parent, which must outlive the view.
class Subgraph {
 public:
  Subgraph(const Graph& g)  // NOLINT(google-explicit-constructor)
      : g_(&g), alive_(g.vertices()) {}
  Subgraph(const Graph& g, VertexSet alive) : g_(&g), alive_(std::move(alive)) {}

  const Graph& parent() const { return *g_; }
  const VertexSet& vertices() const { return alive_; }
  std::size_t order() const { return alive_.size(); }
  std::size_t universe() const { return g_->order(); }
  bool contains(Vertex v) const { return alive_.contains(v); }
  bool adjacent(Vertex u, Vertex v) const { return contains(u) && contains(v) && g_->adjacent(u, v); }
  VertexSet neighbors(Vertex v) const { return g_->row(v) & alive_; }
  std::size_t degree(Vertex v) const { return g_->row(v).intersection_size(alive_); }

  Subgraph without(Vertex v) const { return {*g_, alive_.without(v)}; }
  Subgraph without(const VertexSet& s) const { return {*g_, alive_ - s}; }
  Subgraph restricted(const VertexSet& s) const { return {*g_, alive_ & s}; }
  Subgraph with(Vertex v) const { return {*g_, alive_.with(v)}; }

  VertexSet empty_set() const { return VertexSet(universe()); }

 private:
  const Graph* g_;
  VertexSet alive_;
};

struct InducedGraph {
  Graph graph;
  std::vector<Vertex> to_parent;    // new id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> new id, or -1
};

// Materialises G[s] with vertices renumbered in ascending parent order.
inline InducedGraph induced(const Graph& g, const VertexSet& s) {
  InducedGraph out;
  out.from_parent.assign(g.order(), -1);
  for (Vertex v : s) {
    if (!g.has_vertex(v)) throw PreconditionError("induced: vertex outside graph");
    out.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<VertexSet> rows(out.to_parent.size(), VertexSet(out.to_parent.size()));
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (Vertex w : g.row(out.to_parent[i]) & s) rows[i].insert(out.from_parent[static_cast<std::size_t>(w)]);
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}
inline InducedGraph induced(const Subgraph& h) { return induced(h.parent(), h.vertices()); }

// Simple path inside h; with `hamiltonian` it must also cover h.
inline bool is_path_valid(const Subgraph& h, std::span<const Vertex> path, bool hamiltonian) {
  if (path.empty()) return !hamiltonian || h.order() == 0;
  VertexSet seen(h.universe());
  for (std::size_t i = 0; i < path.size(); ++i) {
    Vertex v = path[i];
    if (!h.contains(v) || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !h.parent().adjacent(path[i - 1], v)) return false;
  }
  return !hamiltonian || seen.size() == h.order();
}

// Disjoint simple paths covering h, paths[i] starting at starts[i].
inline bool is_path_cover_valid(const Subgraph& h, const PathCover& cover, std::span<const Vertex> starts) {
  if (cover.paths.size() != starts.size()) return false;
  VertexSet seen(h.universe());
  std::size_t total = 0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const auto& p = cover.paths[i];
    if (p.empty() || p.front() != starts[i] || !is_path_valid(h, p, false)) return false;
    for (Vertex v : p) {
      if (seen.contains(v)) return false;
      seen.insert(v);
    }
    total += p.size();
  }
  return total == h.order();
}

// Any two disjoint paths covering h (for No-verdict covers).
inline bool is_two_path_cover(const Subgraph& h, const PathCover& cover) {
  if (cover.paths.size() != 2) return false;
  std::vector<Vertex> starts{cover.paths[0].empty() ? -1 : cover.paths[0].front(),
                             cover.paths[1].empty() ? -1 : cover.paths[1].front()};
  return is_path_cover_valid(h, cover, starts);
}

}  // namespace hamkit
