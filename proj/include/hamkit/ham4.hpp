#pragma once

// Hamiltonian paths, paths from a fixed start, and two-path covers from two
// fixed starts in 4K1-free graphs.

#include <optional>
#include <stdexcept>
#include <string>

#include "hamkit/ham3.hpp"

namespace hamkit::ham4 {

namespace detail {

using hamkit::detail::append_tail;
using hamkit::detail::clique_path;

inline VertexSet set_of(const Subgraph& h, std::initializer_list<Vertex> vs) { return VertexSet(h.universe(), vs); }

// Obstacles to any Hamiltonian path of a connected graph.
// ArticulationWithThreeComponents [x] with the components of G-x;
// ArticulationTriangle [x, y, z] with the components of G-{x,y,z}.
inline std::optional<Obstacle> ham_path_obstacle(const Subgraph& h, const VertexSet& arts) {
  for (Vertex x : arts) {
    auto d = components(h, set_of(h, {x}));
    if (d.count() >= 3) return Obstacle{ObstacleKind::ArticulationWithThreeComponents, {x}, d.components, ""};
  }
  for (Vertex x : arts)
    for (Vertex y : arts & h.parent().row(x)) {
      if (y <= x) continue;
      for (Vertex z : arts & h.parent().row(x) & h.parent().row(y)) {
        if (z <= y) continue;
        auto d = components(h, set_of(h, {x, y, z}));
        return Obstacle{ObstacleKind::ArticulationTriangle, {x, y, z}, d.components, ""};
      }
    }
  return std::nullopt;
}

// Component of `d` attached to exactly `a` among `cut`, if unique.
inline const VertexSet* private_component(const Subgraph& h, const CutDecomposition& d, Vertex a) {
  const VertexSet* found = nullptr;
  for (const auto& q : d.components) {
    bool touches_a = false, touches_other = false;
    for (Vertex c : d.cut) {
      bool t = h.parent().row(c).intersects(q);
      if (c == a) touches_a = t;
      else touches_other = touches_other || t;
    }
    if (touches_a && !touches_other) {
      if (found) return nullptr;
      found = &q;
    }
  }
  return found;
}

// Cliques ending next to `a` (reversed start) and starting next to `a`.
inline VertexPath clique_into(const Subgraph& h, const VertexSet& q, Vertex a) {
  auto p = clique_path(q, (h.neighbors(a) & q).front(), -1);
  return VertexPath(p.rbegin(), p.rend());
}
inline VertexPath clique_from(const Subgraph& h, const VertexSet& q, Vertex a) {
  return clique_path(q, (h.neighbors(a) & q).front(), -1);
}

// Two paths covering G when a Hamiltonian path is ruled out.
inline PathCover no_path_cover(const Subgraph& h, const Obstacle& o) {
  PathCover pc;
  if (o.kind == ObstacleKind::ArticulationWithThreeComponents && o.sets.size() == 3) {
    Vertex x = o.vertices[0];
    auto p = clique_into(h, o.sets[0], x);
    p.push_back(x);
    auto q = clique_from(h, o.sets[1], x);
    p.insert(p.end(), q.begin(), q.end());
    pc.paths = {p, clique_path(o.sets[2], -1, -1)};
    return pc;
  }
  if (o.kind == ObstacleKind::ArticulationTriangle) {
    Vertex x = o.vertices[0], y = o.vertices[1], z = o.vertices[2];
    CutDecomposition d{set_of(h, {x, y, z}), o.sets};
    const VertexSet* qx = private_component(h, d, x);
    const VertexSet* qy = private_component(h, d, y);
    const VertexSet* qz = private_component(h, d, z);
    if (d.count() == 3 && qx && qy && qz) {
      auto p = clique_into(h, *qx, x);
      p.push_back(x);
      p.push_back(y);
      auto q = clique_from(h, *qy, y);
      p.insert(p.end(), q.begin(), q.end());
      VertexPath r{z};
      auto t = clique_from(h, *qz, z);
      r.insert(r.end(), t.begin(), t.end());
      pc.paths = {p, r};
      return pc;
    }
  }
  throw std::logic_error("ham4: unexpected structure around a Hamiltonian path obstacle");
}

// Hamiltonian path starting in `starts` for a connected graph with
// alpha <= 2, lowest feasible start first.
inline std::optional<VertexPath> start_path_3k1(const Subgraph& h, const VertexSet& starts) {
  if (is_clique(h)) {
    if (starts.empty()) return std::nullopt;
    return clique_path(h.vertices(), starts.front(), -1);
  }
  auto cv = cut_vertices(h);
  for (Vertex s : starts)
    if (!cv.contains(s)) return ham3::detail::build_path_from(h, s);
  return std::nullopt;
}

inline VertexPath build_ham_path(const Subgraph& h) {
  if (h.order() <= 2) return h.vertices().to_vector();
  auto arts = cut_vertices(h);
  if (arts.empty()) {
    auto p = path_by_fan_extension(h, 2);
    if (!p) throw std::logic_error("ham4: path extension failed on a 2-connected 4K1-free graph");
    return *p;
  }
  // Both sides of an articulation point are 3K1-free.
  Vertex x = arts.front();
  auto d = components(h, set_of(h, {x}));
  auto left = start_path_3k1(h.restricted(d.components[0]), h.neighbors(x) & d.components[0]);
  auto right = start_path_3k1(h.restricted(d.components[1]), h.neighbors(x) & d.components[1]);
  if (!left || !right) throw std::logic_error("ham4: no admissible start next to the articulation point");
  VertexPath p(left->rbegin(), left->rend());
  p.push_back(x);
  p.insert(p.end(), right->begin(), right->end());
  return p;
}

// First violated start-vertex condition, in check order. Layouts:
// StartIsArticulation [u]; Cond_c [x, y] with {Q_u}; Cond_d [x] with {Q_u};
// Cond_e [x] with the components of G-{u,x}; Cond_f [x, y] with {Q1, Q2}.
inline std::optional<Obstacle> start_obstacle(const Subgraph& h, Vertex u) {
  auto arts = cut_vertices(h);
  if (auto o = ham_path_obstacle(h, arts)) return o;
  if (arts.contains(u)) return Obstacle{ObstacleKind::StartIsArticulation, {u}, {}, ""};
  for (Vertex x : arts) {
    auto qu = component_of(h.without(x), u);
    auto hq = h.restricted(qu);
    auto nx = h.neighbors(x) & qu;
    if (!is_biconnected(hq)) {
      for (Vertex y : cut_vertices(hq)) {
        if (y == u) continue;
        auto dy = components(hq, set_of(h, {y}));
        int iu = dy.index_of(u);
        bool ok = false;
        for (Vertex v : nx)
          if (v != y && dy.index_of(v) != iu) ok = true;
        if (!ok) return Obstacle{ObstacleKind::CondC, {x, y}, {qu}, ""};
      }
    } else {
      bool ok = false;
      for (Vertex v : nx)
        if (v != u && !is_cut(hq, set_of(h, {u, v}))) ok = true;
      if (!ok) return Obstacle{ObstacleKind::CondD, {x}, {qu}, ""};
    }
  }
  for (Vertex x : h.vertices()) {
    if (x == u) continue;
    auto d = components(h, set_of(h, {u, x}));
    if (d.count() >= 3) return Obstacle{ObstacleKind::CondE, {x}, d.components, ""};
  }
  if (arts.empty() && h.order() >= 3) {
    for (const auto& cut : two_cuts(h)) {
      if (cut.count() != 2) continue;
      auto ab = cut.cut.to_vector();
      for (int r = 0; r < 2; ++r) {
        Vertex x = ab[static_cast<std::size_t>(r)], y = ab[static_cast<std::size_t>(1 - r)];
        if (u != y) continue;
        for (int k = 0; k < 2; ++k) {
          const auto& q1 = cut.components[static_cast<std::size_t>(k)];
          const auto& q2 = cut.components[static_cast<std::size_t>(1 - k)];
          if (!is_clique(h.restricted(q1))) continue;
          if ((h.neighbors(x) & q2).subset_of(cut_vertices(h.restricted(q2))))
            return Obstacle{ObstacleKind::CondF, {x, y}, {q1, q2}, ""};
        }
      }
    }
  }
  return std::nullopt;
}

// First violated cover condition. Layouts: PC_a [x]; PC_b [x, y, z];
// PC_c [u, v] with the components of G-{u,v}; PC_d [x, y] with {Q1, J1};
// Disconnected [] or [w] (endpoint that is a cut vertex of its component).
inline std::optional<Obstacle> pc_obstacle(const Subgraph& h, Vertex u, Vertex v) {
  if (!is_connected(h)) {
    auto comps = component_sets(h);
    if (comps.size() != 2) return Obstacle{ObstacleKind::Disconnected, {}, comps, "component count is not 2"};
    int iu = comps[0].contains(u) ? 0 : 1, iv = comps[0].contains(v) ? 0 : 1;
    if (iu == iv) return Obstacle{ObstacleKind::Disconnected, {}, comps, "u and v share a component"};
    if (cut_vertices(h.restricted(comps[static_cast<std::size_t>(iu)])).contains(u))
      return Obstacle{ObstacleKind::Disconnected, {u}, comps, "u is a cut vertex of its component"};
    if (cut_vertices(h.restricted(comps[static_cast<std::size_t>(iv)])).contains(v))
      return Obstacle{ObstacleKind::Disconnected, {v}, comps, "v is a cut vertex of its component"};
    return std::nullopt;
  }
  auto arts = cut_vertices(h);
  for (Vertex x : arts) {
    auto d = components(h, set_of(h, {x}));
    if (d.count() >= 3 && (x == u || x == v || d.index_of(u) == d.index_of(v)))
      return Obstacle{ObstacleKind::PcA, {x}, d.components, ""};
  }
  for (Vertex x : arts)
    for (Vertex y : arts & h.parent().row(x)) {
      if (y <= x) continue;
      for (Vertex z : arts & h.parent().row(x) & h.parent().row(y)) {
        if (z <= y) continue;
        auto t = set_of(h, {x, y, z});
        auto d = components(h, t);
        bool in_u = t.contains(u), in_v = t.contains(v);
        bool bad = false;
        if (!in_u && !in_v) {
          bad = d.index_of(u) == d.index_of(v);
        } else if (in_u != in_v) {
          Vertex inside = in_u ? u : v, outside = in_u ? v : u;
          bad = h.parent().row(inside).intersects(d.components[static_cast<std::size_t>(d.index_of(outside))]);
        }
        if (bad) return Obstacle{ObstacleKind::PcB, {x, y, z}, d.components, ""};
      }
    }
  {
    auto d = components(h, set_of(h, {u, v}));
    if (d.count() >= 3) return Obstacle{ObstacleKind::PcC, {u, v}, d.components, ""};
  }
  for (Vertex x : arts) {
    if (x == u) continue;
    auto d = components(h, set_of(h, {x}));
    if (d.count() != 2) continue;
    const auto& q1 = d.components[static_cast<std::size_t>(d.index_of(u))];
    if (!q1.contains(v)) continue;
    auto hq = h.restricted(q1);
    auto nx = h.neighbors(x) & q1;
    for (Vertex y : cut_vertices(hq)) {
      if (y == u || y == v) continue;
      auto dj = components(hq, set_of(h, {y}));
      const auto& j1 = dj.components[static_cast<std::size_t>(dj.index_of(u))];
      if (!j1.contains(v) || j1.size() <= 2 || !nx.subset_of(j1.with(y))) continue;
      auto helpers = (h.parent().row(x) | h.parent().row(y)) & j1;
      helpers.erase(u);
      helpers.erase(v);
      if (helpers.empty()) return Obstacle{ObstacleKind::PcD, {x, y}, {q1, j1}, ""};
    }
  }
  return std::nullopt;
}

// Hamiltonian path from u, one vertex at a time: the next vertex is the
// lowest neighbour w whose removal of the head leaves a graph with a path
// from w, as decided by the start-vertex conditions.
// quick_steps bounds a plain search tried first; 0 skips it.
inline VertexPath build_path_from(const Subgraph& h, Vertex u, std::size_t quick_steps = 4) {
  if (quick_steps > 0)
    if (auto quick = hamkit::detail::bounded_walk(h, u, -1, quick_steps * h.order())) return *quick;
  VertexPath path{u};
  Subgraph cur = h;
  Vertex head = u;
  while (cur.order() > 1) {
    if (!independent_set_of_size(cur, 3)) {
      append_tail(path, ham3::detail::build_path_from(cur, head));
      return path;
    }
    Subgraph rest = cur.without(head);
    Vertex next = -1;
    if (is_connected(rest))
      for (Vertex w : cur.neighbors(head))
        if (!start_obstacle(rest, w)) {
          next = w;
          break;
        }
    if (next == -1) throw std::logic_error("ham4: no extendable neighbour on a Yes instance");
    path.push_back(next);
    head = next;
    cur = rest;
  }
  return path;
}

inline PathCover build_cover(const Subgraph& h, Vertex u, Vertex v, std::size_t quick_steps = 4) {
  PathCover pc;
  pc.paths.resize(2);
  if (!is_connected(h)) {
    auto cu = component_of(h, u), cv = component_of(h, v);
    pc.paths[0] = ham3::detail::build_path_from(h.restricted(cu), u);
    pc.paths[1] = ham3::detail::build_path_from(h.restricted(cv), v);
    return pc;
  }
  if (quick_steps > 0)
    if (auto quick = hamkit::detail::bounded_walk(h, u, v, quick_steps * h.order())) {
      hamkit::detail::split_at(*quick, v, pc.paths[0], pc.paths[1]);
      return pc;
    }
  if (!start_obstacle(h, u)) {
    hamkit::detail::split_at(build_path_from(h, u, quick_steps), v, pc.paths[0], pc.paths[1]);
    return pc;
  }
  if (!start_obstacle(h, v)) {
    hamkit::detail::split_at(build_path_from(h, v, quick_steps), u, pc.paths[1], pc.paths[0]);
    return pc;
  }
  // Grow u's path while the remainder still admits a cover; stop as soon as
  // the remainder has a Hamiltonian path from v.
  VertexPath up{u};
  Subgraph cur = h;
  Vertex head = u;
  while (true) {
    Subgraph rest = cur.without(head);
    if (is_connected(rest) && !start_obstacle(rest, v)) {
      pc.paths[0] = std::move(up);
      pc.paths[1] = build_path_from(rest, v, quick_steps);
      return pc;
    }
    Vertex next = -1;
    for (Vertex w : cur.neighbors(head))
      if (w != v && !pc_obstacle(rest, w, v)) {
        next = w;
        break;
      }
    if (next == -1) throw std::logic_error("ham4: cover construction stuck on a Yes instance");
    up.push_back(next);
    head = next;
    cur = rest;
  }
}

inline void check_ham4_input(const Subgraph& h, const char* op) {
  hamkit::detail::require_connected(h, op);
  require_kk1_free(h, 4, op);
}

// Hamiltonian path starting in `starts` for a connected graph with
// alpha <= 3, lowest feasible start first.
inline std::optional<VertexPath> start_path_any(const Subgraph& h, const VertexSet& starts) {
  if (!independent_set_of_size(h, 3)) return start_path_3k1(h, starts);
  if (independent_set_of_size(h, 4)) return std::nullopt;
  for (Vertex s : starts)
    if (!start_obstacle(h, s)) return build_path_from(h, s);
  return std::nullopt;
}

}  // namespace detail

// Hamiltonian path of a connected 4K1-free graph. A No verdict carries two
// disjoint paths covering the graph.
inline Verdict<VertexPath> decide_ham_path(const Subgraph& h) {
  detail::check_ham4_input(h, "decide_ham_path");
  if (auto o = detail::ham_path_obstacle(h, cut_vertices(h))) {
    auto cover = detail::no_path_cover(h, *o);
    if (!is_two_path_cover(h, cover)) throw std::logic_error("decide_ham_path: two-path cover failed validation");
    return Verdict<VertexPath>::no(std::move(*o), std::move(cover));
  }
  auto p = detail::build_ham_path(h);
  if (!is_path_valid(h, p, true)) throw std::logic_error("decide_ham_path: constructed path failed validation");
  return Verdict<VertexPath>::yes(std::move(p));
}

// Hamiltonian path starting at u in a connected 4K1-free graph.
inline Verdict<VertexPath> decide_path_from(const Subgraph& h, Vertex u) {
  hamkit::detail::require_vertex(h, u, "decide_path_from");
  detail::check_ham4_input(h, "decide_path_from");
  if (auto o = detail::start_obstacle(h, u)) return Verdict<VertexPath>::no(std::move(*o));
  auto p = detail::build_path_from(h, u);
  if (!is_path_valid(h, p, true) || p.front() != u)
    throw std::logic_error("decide_path_from: constructed path failed validation");
  return Verdict<VertexPath>::yes(std::move(p));
}

// Two disjoint paths starting at u and at v that cover a 4K1-free graph,
// which may be disconnected.
inline Verdict<PathCover> path_cover_uv(const Subgraph& h, Vertex u, Vertex v) {
  hamkit::detail::require_vertex(h, u, "path_cover_uv");
  hamkit::detail::require_vertex(h, v, "path_cover_uv");
  if (u == v) throw PreconditionError("path_cover_uv: u and v must differ");
  require_kk1_free(h, 4, "path_cover_uv");
  if (auto o = detail::pc_obstacle(h, u, v)) return Verdict<PathCover>::no(std::move(*o));
  auto pc = detail::build_cover(h, u, v);
  std::vector<Vertex> starts{u, v};
  if (!is_path_cover_valid(h, pc, starts)) throw std::logic_error("path_cover_uv: constructed cover failed validation");
  return Verdict<PathCover>::yes(std::move(pc));
}

// Independent re-derivation of a Hamiltonian path obstacle.
inline bool recheck_ham_path(const Subgraph& h, const Obstacle& o) {
  if (o.kind == ObstacleKind::ArticulationWithThreeComponents)
    return o.vertices.size() == 1 && h.contains(o.vertices[0]) &&
           component_count(h.without(o.vertices[0])) >= 3;
  if (o.kind == ObstacleKind::ArticulationTriangle) {
    if (o.vertices.size() != 3) return false;
    for (std::size_t i = 0; i < 3; ++i) {
      Vertex a = o.vertices[i];
      if (!h.contains(a) || !is_cut(h, VertexSet(h.universe(), {a}))) return false;
      if (!h.adjacent(a, o.vertices[(i + 1) % 3])) return false;
    }
    return true;
  }
  return false;
}

inline bool recheck_from(const Subgraph& h, Vertex u, const Obstacle& o) {
  auto one = [&](Vertex a) { return VertexSet(h.universe(), {a}); };
  switch (o.kind) {
    case ObstacleKind::ArticulationWithThreeComponents:
    case ObstacleKind::ArticulationTriangle:
      return recheck_ham_path(h, o);
    case ObstacleKind::StartIsArticulation:
      return o.vertices == std::vector<Vertex>{u} && is_cut(h, one(u));
    case ObstacleKind::CondC: {
      if (o.vertices.size() != 2) return false;
      Vertex x = o.vertices[0], y = o.vertices[1];
      if (x == u || y == u || !is_cut(h, one(x))) return false;
      auto qu = component_of(h.without(x), u);
      auto hq = h.restricted(qu);
      if (is_biconnected(hq) || !hq.contains(y) || !is_cut(hq, one(y))) return false;
      auto rest = hq.without(y);
      auto cu = component_of(rest, u);
      for (Vertex w : h.neighbors(x) & qu)
        if (w != y && !cu.contains(w)) return false;
      return true;
    }
    case ObstacleKind::CondD: {
      if (o.vertices.size() != 1) return false;
      Vertex x = o.vertices[0];
      if (x == u || !is_cut(h, one(x))) return false;
      auto qu = component_of(h.without(x), u);
      auto hq = h.restricted(qu);
      if (!is_biconnected(hq)) return false;
      for (Vertex w : h.neighbors(x) & qu)
        if (w != u && !is_cut(hq, VertexSet(h.universe(), {u, w}))) return false;
      return true;
    }
    case ObstacleKind::CondE:
      return o.vertices.size() == 1 && o.vertices[0] != u && h.contains(o.vertices[0]) &&
             component_count(h.without(VertexSet(h.universe(), {u, o.vertices[0]}))) >= 3;
    case ObstacleKind::CondF: {
      if (o.vertices.size() != 2 || o.sets.size() != 2) return false;
      Vertex x = o.vertices[0], y = o.vertices[1];
      if (y != u || !is_biconnected(h)) return false;
      auto d = components(h, VertexSet(h.universe(), {x, y}));
      if (d.count() != 2) return false;
      const auto& q1 = o.sets[0];
      const auto& q2 = o.sets[1];
      if (!((d.components[0] == q1 && d.components[1] == q2) || (d.components[0] == q2 && d.components[1] == q1)))
        return false;
      return is_clique(h.restricted(q1)) && (h.neighbors(x) & q2).subset_of(cut_vertices(h.restricted(q2)));
    }
    default:
      return false;
  }
}

inline bool recheck_pc(const Subgraph& h, Vertex u, Vertex v, const Obstacle& o) {
  switch (o.kind) {
    case ObstacleKind::Disconnected: {
      auto comps = component_sets(h);
      if (comps.size() < 2) return false;
      if (comps.size() != 2) return true;
      auto cu = component_of(h, u);
      if (cu.contains(v)) return true;
      auto cv = component_of(h, v);
      return cut_vertices(h.restricted(cu)).contains(u) || cut_vertices(h.restricted(cv)).contains(v);
    }
    case ObstacleKind::PcA: {
      if (o.vertices.size() != 1 || !is_connected(h)) return false;
      Vertex x = o.vertices[0];
      auto d = components(h, VertexSet(h.universe(), {x}));
      return d.count() >= 3 && (x == u || x == v || d.index_of(u) == d.index_of(v));
    }
    case ObstacleKind::PcB: {
      if (o.vertices.size() != 3 || !is_connected(h)) return false;
      auto t = VertexSet::of(h.universe(), o.vertices);
      for (std::size_t i = 0; i < 3; ++i)
        if (!is_cut(h, VertexSet(h.universe(), {o.vertices[i]})) || !h.adjacent(o.vertices[i], o.vertices[(i + 1) % 3]))
          return false;
      auto d = components(h, t);
      bool in_u = t.contains(u), in_v = t.contains(v);
      if (!in_u && !in_v) return d.index_of(u) == d.index_of(v);
      if (in_u == in_v) return false;
      Vertex inside = in_u ? u : v, outside = in_u ? v : u;
      return h.parent().row(inside).intersects(d.components[static_cast<std::size_t>(d.index_of(outside))]);
    }
    case ObstacleKind::PcC:
      return is_connected(h) && component_count(h.without(VertexSet(h.universe(), {u, v}))) >= 3;
    case ObstacleKind::PcD: {
      if (o.vertices.size() != 2 || !is_connected(h)) return false;
      Vertex x = o.vertices[0], y = o.vertices[1];
      if (x == u || y == u || y == v || !is_cut(h, VertexSet(h.universe(), {x}))) return false;
      auto d = components(h, VertexSet(h.universe(), {x}));
      if (d.count() != 2) return false;
      auto q1 = component_of(h.without(x), u);
      if (!q1.contains(v) || !q1.contains(y)) return false;
      auto hq = h.restricted(q1);
      if (!is_cut(hq, VertexSet(h.universe(), {y}))) return false;
      auto j1 = component_of(hq.without(y), u);
      if (!j1.contains(v) || j1.size() <= 2) return false;
      if (!(h.neighbors(x) & q1).subset_of(j1.with(y))) return false;
      auto helpers = (h.parent().row(x) | h.parent().row(y)) & j1;
      helpers.erase(u);
      helpers.erase(v);
      return helpers.empty();
    }
    default:
      return false;
  }
}

}  // namespace hamkit::ham4
