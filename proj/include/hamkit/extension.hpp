#pragma once

// Long paths and cycles grown one fan at a time. For an off-path vertex x,
// a fan of disjoint paths to the current path or cycle lands on endpoints
// y_1..y_m. Either two of x, succ(y_1), ..., succ(y_m) are adjacent (or some
// succ(y_i) is itself an endpoint) and the structure can be lengthened, or
// those m+1 vertices are independent. With m >= alpha the second outcome is
// impossible, so the loop only stops when everything is covered.

#include <algorithm>
#include <optional>
#include <vector>

#include "hamkit/connectivity.hpp"

namespace hamkit {

namespace detail {

// Walks forward from `start` by lowest unvisited neighbour, then extends the
// other end the same way. Both ends are stuck afterwards.
inline VertexPath greedy_path(const Subgraph& h, Vertex start) {
  VertexSet used(h.universe());
  used.insert(start);
  std::vector<Vertex> front, back{start};
  auto step = [&](std::vector<Vertex>& side, Vertex from) {
    for (Vertex cur = from;;) {
      Vertex w = (h.neighbors(cur) - used).front();
      if (w == -1) break;
      used.insert(w);
      side.push_back(w);
      cur = w;
    }
  };
  step(back, start);
  step(front, start);
  VertexPath p(front.rbegin(), front.rend());
  p.insert(p.end(), back.begin(), back.end());
  return p;
}

inline std::vector<int> positions(std::size_t universe, const std::vector<Vertex>& seq) {
  std::vector<int> pos(universe, -1);
  for (std::size_t i = 0; i < seq.size(); ++i) pos[static_cast<std::size_t>(seq[i])] = static_cast<int>(i);
  return pos;
}

inline void append_reversed_tail(std::vector<Vertex>& out, const VertexPath& p) {
  // p runs x..y; appends p without y, backwards: ..., x
  for (std::size_t i = p.size() - 1; i-- > 0;) out.push_back(p[i]);
}
inline void append_inner(std::vector<Vertex>& out, const VertexPath& p) {
  // p runs x..y; appends the vertices strictly between x and y
  for (std::size_t i = 1; i + 1 < p.size(); ++i) out.push_back(p[i]);
}

// Inserts every off-cycle vertex adjacent to two consecutive cycle vertices.
inline void cheap_cycle_insertions(const Subgraph& h, std::vector<Vertex>& cycle) {
  const std::size_t n = h.universe();
  std::vector<Vertex> nxt(n, -1);
  VertexSet on(n);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    nxt[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    on.insert(cycle[i]);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex x : h.vertices() - on) {
      for (Vertex c : h.neighbors(x) & on) {
        Vertex d = nxt[static_cast<std::size_t>(c)];
        if (h.parent().adjacent(x, d)) {
          nxt[static_cast<std::size_t>(c)] = x;
          nxt[static_cast<std::size_t>(x)] = d;
          on.insert(x);
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<Vertex> out;
  out.reserve(on.size());
  Vertex c = cycle.front();
  do {
    out.push_back(c);
    c = nxt[static_cast<std::size_t>(c)];
  } while (c != cycle.front());
  cycle = std::move(out);
}

// One fan step on a cycle. Returns a longer cycle, or nothing if the fan is
// short or the independent-set outcome occurs.
inline std::optional<std::vector<Vertex>> extend_cycle(const Subgraph& h, const std::vector<Vertex>& c, Vertex x,
                                                       std::size_t s) {
  const std::size_t L = c.size();
  auto on = VertexSet::of(h.universe(), c);
  auto fan = disjoint_paths(h, x, on, std::min(s, L));
  if (fan.paths.size() < std::min(s, L)) return std::nullopt;
  auto pos = positions(h.universe(), c);
  auto at = [&](std::size_t i) { return c[i % L]; };
  const auto m = fan.paths.size();
  std::vector<std::size_t> py(m);
  for (std::size_t i = 0; i < m; ++i) py[i] = static_cast<std::size_t>(pos[static_cast<std::size_t>(fan.targets[i])]);

  // c[p+1 .. p] all the way round, then back to x through P_i, then P_j.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || py[j] != (py[i] + 1) % L) continue;
      std::vector<Vertex> out;
      for (std::size_t k = 1; k <= L; ++k) out.push_back(at(py[i] + k));
      append_reversed_tail(out, fan.paths[i]);
      append_inner(out, fan.paths[j]);
      return out;
    }
  for (std::size_t i = 0; i < m; ++i) {
    if (!h.parent().adjacent(x, at(py[i] + 1))) continue;
    std::vector<Vertex> out;
    for (std::size_t k = 1; k <= L; ++k) out.push_back(at(py[i] + k));
    append_reversed_tail(out, fan.paths[i]);
    return out;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || !h.parent().adjacent(at(py[i] + 1), at(py[j] + 1))) continue;
      // x -P_j-> y_j, back along the cycle to succ(y_i), jump to succ(y_j),
      // forward to y_i, then P_i back towards x.
      std::vector<Vertex> out(fan.paths[j].begin(), fan.paths[j].end());
      const std::size_t span = (py[j] + L - py[i]) % L;  // steps from y_i to y_j
      for (std::size_t k = span - 1; k >= 1; --k) out.push_back(at(py[i] + k));
      for (std::size_t k = span + 1; k <= L; ++k) out.push_back(at(py[i] + k));
      append_inner(out, VertexPath(fan.paths[i].rbegin(), fan.paths[i].rend()));
      return out;
    }
  return std::nullopt;
}

inline std::optional<std::vector<Vertex>> seed_cycle(const Subgraph& h) {
  auto p = greedy_path(h, h.vertices().front());
  std::optional<std::vector<Vertex>> best;
  auto close_at = [&](const VertexPath& q) {
    Vertex e = q.back();
    for (std::size_t i = 0; i + 2 < q.size(); ++i)
      if (h.parent().adjacent(q[i], e)) {
        std::vector<Vertex> c(q.begin() + static_cast<std::ptrdiff_t>(i), q.end());
        if (!best || c.size() > best->size()) best = std::move(c);
        return;
      }
  };
  close_at(p);
  close_at(VertexPath(p.rbegin(), p.rend()));
  return best;
}


// Depth-first search for a Hamiltonian path from `start`, trying the
// neighbour with fewest unused neighbours first. With `jump_to` set, the walk
// may once jump to that vertex (which is otherwise unreachable); the result
// is then two paths concatenated. Gives up after `budget` steps.
inline std::optional<VertexPath> bounded_walk(const Subgraph& h, Vertex start, Vertex jump_to, std::size_t budget) {
  VertexPath path{start};
  VertexSet used(h.universe(), {start});
  std::size_t steps = 0, jump_at = 0;
  const std::size_t n = h.order();
  auto rec = [&](auto&& self) -> bool {
    if (path.size() == n) return true;
    if (++steps > budget) return false;
    Vertex cur = path.back();
    auto open = h.neighbors(cur) - used;
    if (jump_to != -1 && !used.contains(jump_to)) open.erase(jump_to);
    std::vector<std::pair<std::size_t, Vertex>> order;
    for (Vertex w : open) order.push_back({h.parent().row(w).intersection_size(h.vertices() - used), w});
    std::sort(order.begin(), order.end());
    if (jump_to != -1 && !used.contains(jump_to)) order.push_back({n, jump_to});
    for (auto [deg, w] : order) {
      bool jump = w == jump_to && jump_at == 0;
      if (jump) jump_at = path.size();
      used.insert(w);
      path.push_back(w);
      if (self(self)) return true;
      path.pop_back();
      used.erase(w);
      if (jump) jump_at = 0;
      if (steps > budget) return false;
    }
    return false;
  };
  if (!rec(rec)) return std::nullopt;
  return path;
}

}  // namespace detail

// Hamiltonian cycle of an s-connected h with alpha(h) <= s. Fails (returns
// nothing) only when those hypotheses do not hold. With fewer than three
// vertices the vertices are returned as a path.
inline std::optional<std::vector<Vertex>> cycle_by_fan_extension(const Subgraph& h, std::size_t s) {
  const std::size_t n = h.order();
  if (n == 0 || !is_connected(h)) return std::nullopt;
  if (n <= 2) return h.vertices().to_vector();
  auto cycle = detail::seed_cycle(h);
  if (!cycle) return std::nullopt;
  while (true) {
    detail::cheap_cycle_insertions(h, *cycle);
    if (cycle->size() == n) return cycle;
    Vertex x = (h.vertices() - VertexSet::of(h.universe(), *cycle)).front();
    auto longer = detail::extend_cycle(h, *cycle, x, s);
    if (!longer) return std::nullopt;
    cycle = std::move(longer);
  }
}

// Hamiltonian path of an s-connected h with alpha(h) <= s + 1, via the
// cycle engine on h plus one universal vertex.
inline std::optional<VertexPath> path_by_fan_extension(const Subgraph& h, std::size_t s) {
  const std::size_t n = h.order();
  if (n == 0 || !is_connected(h)) return std::nullopt;
  auto quick = detail::greedy_path(h, h.vertices().front());
  if (quick.size() == n) return quick;
  auto sub = induced(h);
  std::vector<VertexSet> rows(n + 1, VertexSet(n + 1));
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    for (Vertex w : sub.graph.row(v)) rows[static_cast<std::size_t>(v)].insert(w);
    rows[static_cast<std::size_t>(v)].insert(static_cast<Vertex>(n));
    rows[n].insert(v);
  }
  Graph plus = Graph::from_rows(std::move(rows));
  auto cycle = cycle_by_fan_extension(plus, s + 1);
  if (!cycle) return std::nullopt;
  auto z = std::find(cycle->begin(), cycle->end(), static_cast<Vertex>(n));
  std::rotate(cycle->begin(), z, cycle->end());
  VertexPath out;
  for (std::size_t i = 1; i < cycle->size(); ++i) out.push_back(sub.to_parent[static_cast<std::size_t>((*cycle)[i])]);
  return out;
}

// One extension step for a path p from u = p.front() to v = p.back(),
// keeping both ends. Returns nothing when p cannot be lengthened this way
// (p already spans h, or {u, v} separates the first off-path vertex).
inline std::optional<VertexPath> extend_uv_path(const Subgraph& h, const VertexPath& p, std::size_t s) {
  auto on = VertexSet::of(h.universe(), p);
  auto off = h.vertices() - on;
  if (off.empty() || p.size() < 2) return std::nullopt;
  const Vertex x = off.front();
  VertexSet ends(h.universe(), {p.front(), p.back()});
  auto fan = p.size() == 2 ? detail::disjoint_paths(h, x, on, std::min<std::size_t>(s, 2))
                           : detail::disjoint_paths(h, x, on, s, &ends);
  if (fan.paths.empty()) return std::nullopt;

  // Work on a copy oriented so that no fan endpoint is the last vertex.
  bool flipped = std::find(fan.targets.begin(), fan.targets.end(), p.back()) != fan.targets.end() &&
                 std::find(fan.targets.begin(), fan.targets.end(), p.front()) == fan.targets.end();
  VertexPath q = flipped ? VertexPath(p.rbegin(), p.rend()) : p;
  auto pos = detail::positions(h.universe(), q);
  const auto m = fan.paths.size();
  std::vector<std::size_t> py(m);
  for (std::size_t i = 0; i < m; ++i) py[i] = static_cast<std::size_t>(pos[static_cast<std::size_t>(fan.targets[i])]);
  auto has_succ = [&](std::size_t i) { return py[i] + 1 < q.size(); };
  auto finish = [&](VertexPath r) {
    if (flipped) std::reverse(r.begin(), r.end());
    return r;
  };

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || py[j] != py[i] + 1) continue;
      VertexPath r(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(py[i] + 1));
      detail::append_reversed_tail(r, fan.paths[i]);
      detail::append_inner(r, fan.paths[j]);
      r.insert(r.end(), q.begin() + static_cast<std::ptrdiff_t>(py[j]), q.end());
      return finish(std::move(r));
    }
  for (std::size_t i = 0; i < m; ++i) {
    if (!has_succ(i) || !h.parent().adjacent(x, q[py[i] + 1])) continue;
    VertexPath r(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(py[i] + 1));
    detail::append_reversed_tail(r, fan.paths[i]);
    r.insert(r.end(), q.begin() + static_cast<std::ptrdiff_t>(py[i] + 1), q.end());
    return finish(std::move(r));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (py[i] >= py[j] || !has_succ(i) || !has_succ(j) || !h.parent().adjacent(q[py[i] + 1], q[py[j] + 1]))
        continue;
      // u..y_i, P_i back to x, P_j out to y_j, backwards to succ(y_i),
      // jump to succ(y_j), forwards to v.
      VertexPath r(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(py[i] + 1));
      detail::append_reversed_tail(r, fan.paths[i]);
      r.insert(r.end(), fan.paths[j].begin() + 1, fan.paths[j].end());
      for (std::size_t k = py[j] - 1; k > py[i]; --k) r.push_back(q[k]);
      r.insert(r.end(), q.begin() + static_cast<std::ptrdiff_t>(py[j] + 1), q.end());
      return finish(std::move(r));
    }
  return std::nullopt;
}

inline std::optional<VertexPath> shortest_path(const Subgraph& h, Vertex u, Vertex v) {
  std::vector<Vertex> via(h.universe(), -1);
  VertexSet seen(h.universe(), {u});
  std::vector<Vertex> layer{u};
  while (!layer.empty() && !seen.contains(v)) {
    std::vector<Vertex> next;
    for (Vertex a : layer)
      for (Vertex b : h.neighbors(a) - seen) {
        seen.insert(b);
        via[static_cast<std::size_t>(b)] = a;
        next.push_back(b);
      }
    layer = std::move(next);
  }
  if (!seen.contains(v)) return std::nullopt;
  VertexPath p{v};
  while (p.back() != u) p.push_back(via[static_cast<std::size_t>(p.back())]);
  std::reverse(p.begin(), p.end());
  return p;
}

// Hamiltonian u-v path grown from a shortest u-v path. Guaranteed when h is
// s-connected with alpha(h) < s; in 2-connected 3K1-free graphs it succeeds
// exactly when {u, v} is not a cut.
inline std::optional<VertexPath> uv_path_by_fan_extension(const Subgraph& h, Vertex u, Vertex v, std::size_t s) {
  auto p = shortest_path(h, u, v);
  if (!p) return std::nullopt;
  while (p->size() < h.order()) {
    p = extend_uv_path(h, *p, s);
    if (!p) return std::nullopt;
  }
  return p;
}

}  // namespace hamkit
