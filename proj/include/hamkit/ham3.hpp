#pragma once

// Hamiltonian paths with prescribed ends in 3K1-free graphs.

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hamkit/connectivity.hpp"
#include "hamkit/extension.hpp"
#include "hamkit/independence.hpp"
#include "hamkit/verdict.hpp"

namespace hamkit {

namespace detail {

// Path through every vertex of clique q: first, the rest ascending, last.
// Either end may be -1 (unconstrained).
inline VertexPath clique_path(const VertexSet& q, Vertex first, Vertex last) {
  VertexPath p;
  if (first != -1) p.push_back(first);
  for (Vertex w : q)
    if (w != first && w != last) p.push_back(w);
  if (last != -1 && last != first) p.push_back(last);
  return p;
}

// Lowest vertex of `cands`, avoiding `avoid` unless it is the only choice.
inline Vertex pick_avoiding(const VertexSet& cands, Vertex avoid) {
  for (Vertex w : cands)
    if (w != avoid) return w;
  return cands.front();
}

inline void append_tail(VertexPath& out, const VertexPath& p) { out.insert(out.end(), p.begin() + 1, p.end()); }

inline void require_vertex(const Subgraph& h, Vertex v, const char* op) {
  if (!h.contains(v)) throw PreconditionError(std::string(op) + ": vertex " + std::to_string(v) + " is not in the graph");
}

inline void require_connected(const Subgraph& h, const char* op) {
  if (!is_connected(h)) throw PreconditionError(std::string(op) + ": graph is not connected");
}

inline void split_at(const VertexPath& p, Vertex v, VertexPath& before, VertexPath& from) {
  auto it = std::find(p.begin(), p.end(), v);
  before.assign(p.begin(), it);
  from.assign(it, p.end());
}

}  // namespace detail

namespace ham3 {

namespace detail {

using hamkit::detail::clique_path;
using hamkit::detail::pick_avoiding;

// First violated condition for a Hamiltonian u-v path, in check order.
// Layouts: EndpointIsArticulation [w]; SameSideOfArticulation [x] with
// {component of G-x holding u and v}; EndpointPairIsTwoCut [u, v] with the
// components of G-{u,v}.
inline std::optional<Obstacle> uv_obstacle(const Subgraph& h, Vertex u, Vertex v) {
  auto cv = cut_vertices(h);
  if (cv.contains(u)) return Obstacle{ObstacleKind::EndpointIsArticulation, {u}, {}, ""};
  if (cv.contains(v)) return Obstacle{ObstacleKind::EndpointIsArticulation, {v}, {}, ""};
  for (Vertex x : cv) {
    auto d = components(h, VertexSet(h.universe(), {x}));
    int iu = d.index_of(u);
    if (iu == d.index_of(v))
      return Obstacle{ObstacleKind::SameSideOfArticulation, {x}, {d.components[static_cast<std::size_t>(iu)]}, ""};
  }
  auto d = components(h, VertexSet(h.universe(), {u, v}));
  if (d.count() >= 2) return Obstacle{ObstacleKind::EndpointPairIsTwoCut, {u, v}, d.components, ""};
  return std::nullopt;
}

inline bool start_ok(const Subgraph& h, Vertex u) { return !cut_vertices(h).contains(u); }

// Two cliques hanging off an articulation point x: route from `first` on
// the side holding it, through x, to `last` (or anywhere) on the other side.
inline VertexPath route_through(const Subgraph& h, Vertex x, Vertex first, Vertex last) {
  auto d = components(h, VertexSet(h.universe(), {x}));
  const auto& qa = d.components[static_cast<std::size_t>(d.index_of(first))];
  const auto& qb = d.components[static_cast<std::size_t>(1 - d.index_of(first))];
  Vertex a = pick_avoiding(h.neighbors(x) & qa, first);
  Vertex b = pick_avoiding(h.neighbors(x) & qb, last);
  auto p = clique_path(qa, first, a);
  p.push_back(x);
  auto rest = clique_path(qb, b, last);
  p.insert(p.end(), rest.begin(), rest.end());
  return p;
}

inline VertexPath build_uv_path(const Subgraph& h, Vertex u, Vertex v) {
  if (h.order() == 2) return {u, v};
  auto cv = cut_vertices(h);
  if (!cv.empty()) return route_through(h, cv.front(), u, v);
  auto p = uv_path_by_fan_extension(h, u, v, 2);
  if (!p) throw std::logic_error("ham3: path extension blocked on a Yes instance");
  return *p;
}

inline VertexPath build_path_from(const Subgraph& h, Vertex u) {
  if (h.order() <= 2) return hamkit::detail::clique_path(h.vertices(), u, -1);
  auto cv = cut_vertices(h);
  if (!cv.empty()) return route_through(h, cv.front(), u, -1);
  auto c = cycle_by_fan_extension(h, 2);
  if (!c) throw std::logic_error("ham3: cycle extension failed on a 2-connected 3K1-free graph");
  std::rotate(c->begin(), std::find(c->begin(), c->end(), u), c->end());
  return *c;
}

inline PathCover build_cover(const Subgraph& h, Vertex u, Vertex v) {
  PathCover pc;
  pc.paths.resize(2);
  if (start_ok(h, u)) {
    hamkit::detail::split_at(build_path_from(h, u), v, pc.paths[0], pc.paths[1]);
    return pc;
  }
  // u is an articulation point: v takes its clique, u the other one.
  auto d = components(h, VertexSet(h.universe(), {u}));
  int iv = d.index_of(v);
  const auto& q1 = d.components[static_cast<std::size_t>(iv)];
  const auto& q2 = d.components[static_cast<std::size_t>(1 - iv)];
  pc.paths[1] = clique_path(q1, v, -1);
  pc.paths[0] = {u};
  auto rest = clique_path(q2, (h.neighbors(u) & q2).front(), -1);
  pc.paths[0].insert(pc.paths[0].end(), rest.begin(), rest.end());
  return pc;
}

inline void check_ham3_input(const Subgraph& h, const char* op) {
  hamkit::detail::require_connected(h, op);
  require_kk1_free(h, 3, op);
}

}  // namespace detail

// Hamiltonian path from u to v in a connected 3K1-free graph.
inline Verdict<VertexPath> decide_path_uv(const Subgraph& h, Vertex u, Vertex v) {
  hamkit::detail::require_vertex(h, u, "decide_path_uv");
  hamkit::detail::require_vertex(h, v, "decide_path_uv");
  if (u == v) throw PreconditionError("decide_path_uv: u and v must differ");
  detail::check_ham3_input(h, "decide_path_uv");
  if (auto o = detail::uv_obstacle(h, u, v)) return Verdict<VertexPath>::no(std::move(*o));
  auto p = detail::build_uv_path(h, u, v);
  if (!is_path_valid(h, p, true) || p.front() != u || p.back() != v)
    throw std::logic_error("decide_path_uv: constructed path failed validation");
  return Verdict<VertexPath>::yes(std::move(p));
}

// Hamiltonian path starting at u in a connected 3K1-free graph.
inline Verdict<VertexPath> decide_path_from(const Subgraph& h, Vertex u) {
  hamkit::detail::require_vertex(h, u, "decide_path_from");
  detail::check_ham3_input(h, "decide_path_from");
  if (!detail::start_ok(h, u)) return Verdict<VertexPath>::no({ObstacleKind::EndpointIsArticulation, {u}, {}, ""});
  auto p = detail::build_path_from(h, u);
  if (!is_path_valid(h, p, true) || p.front() != u)
    throw std::logic_error("decide_path_from: constructed path failed validation");
  return Verdict<VertexPath>::yes(std::move(p));
}

// Two disjoint paths from u and from v covering a connected 3K1-free graph.
// Such a cover always exists.
inline PathCover path_cover_uv(const Subgraph& h, Vertex u, Vertex v) {
  hamkit::detail::require_vertex(h, u, "path_cover_uv");
  hamkit::detail::require_vertex(h, v, "path_cover_uv");
  if (u == v) throw PreconditionError("path_cover_uv: u and v must differ");
  detail::check_ham3_input(h, "path_cover_uv");
  auto pc = detail::build_cover(h, u, v);
  std::vector<Vertex> starts{u, v};
  if (!is_path_cover_valid(h, pc, starts)) throw std::logic_error("path_cover_uv: constructed cover failed validation");
  return pc;
}

// One lengthening step for a u-v path in a 2-connected 3K1-free graph.
// Nothing comes back when the path is Hamiltonian or {u, v} blocks it.
inline std::optional<VertexPath> crossover_extend(const Subgraph& h, const VertexPath& p) {
  if (p.size() < 2 || !is_path_valid(h, p, false)) throw PreconditionError("crossover_extend: not a path of the graph");
  return extend_uv_path(h, p, 2);
}

// Re-derives a No certificate for decide_path_uv from the graph alone.
inline bool recheck_uv(const Subgraph& h, Vertex u, Vertex v, const Obstacle& o) {
  switch (o.kind) {
    case ObstacleKind::EndpointIsArticulation:
      return o.vertices.size() == 1 && (o.vertices[0] == u || o.vertices[0] == v) &&
             is_cut(h, VertexSet(h.universe(), {o.vertices[0]}));
    case ObstacleKind::SameSideOfArticulation: {
      if (o.vertices.size() != 1) return false;
      Vertex x = o.vertices[0];
      if (x == u || x == v || !h.contains(x)) return false;
      auto d = components(h, VertexSet(h.universe(), {x}));
      return d.count() >= 2 && d.index_of(u) == d.index_of(v);
    }
    case ObstacleKind::EndpointPairIsTwoCut:
      return is_cut(h, VertexSet(h.universe(), {u, v}));
    default:
      return false;
  }
}

inline bool recheck_from(const Subgraph& h, Vertex u, const Obstacle& o) {
  return o.kind == ObstacleKind::EndpointIsArticulation && o.vertices.size() == 1 && o.vertices[0] == u &&
         is_cut(h, VertexSet(h.universe(), {u}));
}

}  // namespace ham3
}  // namespace hamkit
