#pragma once

// Hamiltonian paths in 5K1-free graphs.

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

#include "hamkit/ham4.hpp"

namespace hamkit::ham5 {

// Non-articulation neighbours of x on each side, lowest first, for an
// articulation point x whose two sides are both 3K1-free.
inline std::optional<std::pair<Vertex, Vertex>> both_sides_3k1_start_pair(const Subgraph& h, Vertex x,
                                                                          const VertexSet& q1, const VertexSet& q2) {
  auto pick = [&](const VertexSet& q) -> Vertex {
    auto hq = h.restricted(q);
    auto cv = cut_vertices(hq);
    for (Vertex w : h.neighbors(x) & q)
      if (!cv.contains(w)) return w;
    return -1;
  };
  Vertex a = pick(q1), b = pick(q2);
  if (a == -1 || b == -1) return std::nullopt;
  return std::make_pair(a, b);
}

namespace detail {

using hamkit::detail::clique_path;

inline int alpha_upto(const Subgraph& h, int cap) {
  int a = h.order() ? 1 : 0;
  while (a < cap && independent_set_of_size(h, static_cast<std::size_t>(a + 1))) ++a;
  return a;
}

// First violated condition. Layouts: ArticulationWithThreeComponents [x];
// ArticulationTriangle [x, y, z]; NoGoodStartInQ2 [x] with {Q1, Q2};
// TwoCutWithFourComponents [x, y] with the components of G-{x,y}.
inline std::optional<Obstacle> obstacle(const Subgraph& h) {
  auto arts = cut_vertices(h);
  if (!arts.empty()) {
    if (auto o = ham4::detail::ham_path_obstacle(h, arts)) return o;
    for (Vertex x : arts) {
      auto d = components(h, VertexSet(h.universe(), {x}));
      for (int k = 0; k < 2; ++k) {
        const auto& q1 = d.components[static_cast<std::size_t>(k)];
        const auto& q2 = d.components[static_cast<std::size_t>(1 - k)];
        if (!is_clique(h.restricted(q1))) continue;
        auto h2 = h.restricted(q2);
        bool good = false;
        for (Vertex w : h.neighbors(x) & q2)
          if (!ham4::detail::start_obstacle(h2, w)) {
            good = true;
            break;
          }
        if (!good) return Obstacle{ObstacleKind::NoGoodStartInQ2, {x}, {q1, q2}, ""};
      }
    }
    return std::nullopt;
  }
  if (h.order() >= 3)
    for (auto& cut : two_cuts(h))
      if (cut.count() >= 4)
        return Obstacle{ObstacleKind::TwoCutWithFourComponents, cut.cut.to_vector(), std::move(cut.components), ""};
  return std::nullopt;
}

// Sub-solvers for the pieces of a path split by a 2-cut. Each declines
// (returns nothing) when its piece lies outside the classes it can decide.
inline std::optional<VertexPath> hp_start(const Subgraph& q, const VertexSet& starts) {
  return ham4::detail::start_path_any(q, starts & q.vertices());
}

inline std::optional<VertexPath> hp_between(const Subgraph& q, const VertexSet& from, const VertexSet& to) {
  auto a = from & q.vertices(), b = to & q.vertices();
  if (q.order() == 1) {
    if ((a & b).empty()) return std::nullopt;
    return q.vertices().to_vector();
  }
  if (is_clique(q)) {
    for (Vertex s : a)
      for (Vertex t : b)
        if (s != t) return clique_path(q.vertices(), s, t);
    return std::nullopt;
  }
  if (independent_set_of_size(q, 3)) return std::nullopt;
  for (Vertex s : a)
    for (Vertex t : b)
      if (s != t && !ham3::detail::uv_obstacle(q, s, t)) return ham3::detail::build_uv_path(q, s, t);
  return std::nullopt;
}

inline std::optional<PathCover> cover_between(const Subgraph& q, const VertexSet& from, const VertexSet& to) {
  if (independent_set_of_size(q, 4)) return std::nullopt;
  for (Vertex s : from & q.vertices())
    for (Vertex t : to & q.vertices())
      if (s != t && !ham4::detail::pc_obstacle(q, s, t)) return ham4::detail::build_cover(q, s, t);
  return std::nullopt;
}

inline VertexPath reversed(const VertexPath& p) { return VertexPath(p.rbegin(), p.rend()); }

inline VertexPath join(std::initializer_list<VertexPath> parts) {
  VertexPath out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Hamiltonian path of the form S1 c1 S2 c2 S3 around the 2-cut {x, y}.
inline std::optional<VertexPath> route_two_cut(const Subgraph& h, const CutDecomposition& cut) {
  auto xy = cut.cut.to_vector();
  const auto& qs = cut.components;
  auto nb = [&](Vertex c) { return h.parent().row(c); };
  const std::array<std::pair<Vertex, Vertex>, 2> orders{{{xy[0], xy[1]}, {xy[1], xy[0]}}};

  if (qs.size() == 3) {
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
      for (auto [c1, c2] : orders) {
        auto s1 = hp_start(h.restricted(qs[perm[0]]), nb(c1));
        if (!s1) continue;
        auto s2 = hp_between(h.restricted(qs[perm[1]]), nb(c1), nb(c2));
        if (!s2) continue;
        auto s3 = hp_start(h.restricted(qs[perm[2]]), nb(c2));
        if (!s3) continue;
        return join({reversed(*s1), {c1}, *s2, {c2}, *s3});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }

  for (auto [c1, c2] : orders)
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& qi = qs[i];
      const auto& qj = qs[1 - i];
      // c1, all of Qi ending next to c2, c2, then Qj.
      if (auto s2 = hp_between(h.restricted(qi), nb(c1), nb(c2)))
        if (auto s3 = hp_start(h.restricted(qj), nb(c2))) return join({{c1}, *s2, {c2}, *s3});
      // Qi with c1 inside, ending next to c2, then c2, then Qj.
      auto with_c1 = h.restricted(qi.with(c1));
      if (alpha_upto(with_c1, 4) <= 3)
        if (auto s1 = hp_start(with_c1, nb(c2) & with_c1.vertices()))
          if (auto s3 = hp_start(h.restricted(qj), nb(c2))) return join({reversed(*s1), {c2}, *s3});
      // Qi split into two paths around c1 Qj c2.
      if (auto mid = hp_between(h.restricted(qj), nb(c1), nb(c2)))
        if (auto pc = cover_between(h.restricted(qi), nb(c1), nb(c2)))
          return join({reversed(pc->paths[0]), {c1}, *mid, {c2}, pc->paths[1]});
    }
  return std::nullopt;
}

inline VertexPath build(const Subgraph& h) {
  if (h.order() <= 2) return h.vertices().to_vector();
  auto arts = cut_vertices(h);
  if (!arts.empty()) {
    Vertex x = arts.front();
    auto d = components(h, VertexSet(h.universe(), {x}));
    const auto& qa = d.components[0];
    const auto& qb = d.components[1];
    std::optional<VertexPath> left, right;
    if (!independent_set_of_size(h.restricted(qa), 3) && !independent_set_of_size(h.restricted(qb), 3)) {
      if (auto ab = both_sides_3k1_start_pair(h, x, qa, qb)) {
        left = ham3::detail::build_path_from(h.restricted(qa), ab->first);
        right = ham3::detail::build_path_from(h.restricted(qb), ab->second);
      }
    } else {
      left = hp_start(h.restricted(qa), h.neighbors(x));
      right = hp_start(h.restricted(qb), h.neighbors(x));
    }
    if (!left || !right) throw std::logic_error("ham5: no admissible start next to the articulation point");
    return join({reversed(*left), {x}, *right});
  }
  auto cuts = two_cuts(h);
  if (cuts.empty()) {
    auto p = path_by_fan_extension(h, 3);
    if (!p) throw std::logic_error("ham5: path extension failed on a 3-connected 5K1-free graph");
    return *p;
  }
  for (const auto& cut : cuts)
    if (cut.count() == 3)
      if (auto p = route_two_cut(h, cut)) return *p;
  for (const auto& cut : cuts)
    if (cut.count() == 2)
      if (auto p = route_two_cut(h, cut)) return *p;
  throw std::logic_error("ham5: no routing around any 2-cut");
}

}  // namespace detail

// Hamiltonian path of a connected 5K1-free graph.
inline Verdict<VertexPath> decide_ham_path(const Subgraph& h) {
  hamkit::detail::require_connected(h, "decide_ham_path");
  require_kk1_free(h, 5, "decide_ham_path");
  if (auto o = detail::obstacle(h)) return Verdict<VertexPath>::no(std::move(*o));
  auto p = detail::build(h);
  if (!is_path_valid(h, p, true)) throw std::logic_error("decide_ham_path: constructed path failed validation");
  return Verdict<VertexPath>::yes(std::move(p));
}

inline bool recheck(const Subgraph& h, const Obstacle& o) {
  switch (o.kind) {
    case ObstacleKind::ArticulationWithThreeComponents:
    case ObstacleKind::ArticulationTriangle:
      return ham4::recheck_ham_path(h, o);
    case ObstacleKind::NoGoodStartInQ2: {
      if (o.vertices.size() != 1 || o.sets.size() != 2) return false;
      Vertex x = o.vertices[0];
      auto d = components(h, VertexSet(h.universe(), {x}));
      if (d.count() != 2) return false;
      const auto& q1 = o.sets[0];
      const auto& q2 = o.sets[1];
      if (!((d.components[0] == q1 && d.components[1] == q2) || (d.components[0] == q2 && d.components[1] == q1)))
        return false;
      if (!is_clique(h.restricted(q1))) return false;
      auto h2 = h.restricted(q2);
      if (independent_set_of_size(h2, 4)) return false;
      for (Vertex w : h.neighbors(x) & q2)
        if (ham4::decide_path_from(h2, w).is_yes()) return false;
      return true;
    }
    case ObstacleKind::TwoCutWithFourComponents:
      return o.vertices.size() == 2 && is_biconnected(h) &&
             component_count(h.without(VertexSet::of(h.universe(), o.vertices))) >= 4;
    default:
      return false;
  }
}

}  // namespace hamkit::ham5
