#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "hamkit/graph.hpp"

namespace hamkit {

// Components of h - cut, listed by their lowest vertex.
struct CutDecomposition {
  VertexSet cut;
  std::vector<VertexSet> components;

  std::size_t count() const { return components.size(); }
  // Index of the component holding v, or -1 (v in the cut or absent).
  int index_of(Vertex v) const {
    for (std::size_t i = 0; i < components.size(); ++i)
      if (components[i].contains(v)) return static_cast<int>(i);
    return -1;
  }
};

inline VertexSet component_of(const Subgraph& h, Vertex v) {
  const Graph& g = h.parent();
  VertexSet comp(h.universe());
  comp.insert(v);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next(h.universe());
    for (Vertex w : frontier) next |= g.row(w);
    next &= h.vertices();
    next -= comp;
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

inline std::vector<VertexSet> component_sets(const Subgraph& h) {
  std::vector<VertexSet> out;
  VertexSet rest = h.vertices();
  while (!rest.empty()) {
    auto comp = component_of(h, rest.front());
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::size_t component_count(const Subgraph& h) {
  std::size_t c = 0;
  VertexSet rest = h.vertices();
  while (!rest.empty()) {
    rest -= component_of(h, rest.front());
    ++c;
  }
  return c;
}

inline bool is_connected(const Subgraph& h) { return h.order() > 0 && component_of(h, h.vertices().front()) == h.vertices(); }

inline CutDecomposition components(const Subgraph& h, const VertexSet& removed) {
  return {removed & h.vertices(), component_sets(h.without(removed))};
}

// h - s has at least two components.
inline bool is_cut(const Subgraph& h, const VertexSet& s) {
  auto rest = h.without(s);
  return rest.order() > 0 && !is_connected(rest);
}

// Vertices whose removal increases the number of components (DFS low-point).
inline VertexSet cut_vertices(const Subgraph& h) {
  const Graph& g = h.parent();
  const std::size_t n = h.universe();
  VertexSet out(n);
  std::vector<int> disc(n, -1), low(n, 0), cursor(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> children(n, 0);
  std::vector<Vertex> stack;
  int timer = 0;
  for (Vertex root : h.vertices()) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      auto vi = static_cast<std::size_t>(v);
      Vertex w = g.row(v).next(cursor[vi]);
      while (w != -1 && !h.contains(w)) w = g.row(v).next(w);
      if (w != -1) {
        cursor[vi] = w;
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] == -1) {
          parent[wi] = v;
          ++children[vi];
          disc[wi] = low[wi] = timer++;
          stack.push_back(w);
        } else if (w != parent[vi]) {
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      stack.pop_back();
      Vertex p = parent[vi];
      if (p != -1) {
        auto pi = static_cast<std::size_t>(p);
        low[pi] = std::min(low[pi], low[vi]);
        if (parent[pi] != -1 && low[vi] >= disc[pi]) out.insert(p);
      }
    }
    if (children[static_cast<std::size_t>(root)] >= 2) out.insert(root);
  }
  return out;
}

inline VertexSet articulation_points(const Subgraph& h) {
  if (!is_connected(h)) throw PreconditionError("articulation_points: graph is not connected");
  return cut_vertices(h);
}

// At least three vertices, connected, no cut vertex.
inline bool is_biconnected(const Subgraph& h) {
  return h.order() >= 3 && is_connected(h) && cut_vertices(h).empty();
}

inline bool is_clique(const Subgraph& h) {
  for (Vertex v : h.vertices())
    if (h.degree(v) + 1 != h.order()) return false;
  return true;
}

// Every pair {a, b} with h - {a, b} disconnected, in lexicographic order.
// With `fixed`, only pairs containing it.
inline std::vector<CutDecomposition> two_cuts(const Subgraph& h, std::optional<Vertex> fixed = std::nullopt) {
  std::vector<CutDecomposition> out;
  auto consider = [&](Vertex a) {
    auto ha = h.without(a);
    auto emit = [&](Vertex b) {
      VertexSet cut(h.universe(), {a, b});
      auto comps = component_sets(h.without(cut));
      if (comps.size() >= 2) out.push_back({std::move(cut), std::move(comps)});
    };
    if (is_connected(ha)) {
      for (Vertex b : cut_vertices(ha))
        if (fixed || b > a) emit(b);
    } else {
      for (Vertex b : ha.vertices())
        if (fixed || b > a) emit(b);
    }
  };
  if (fixed) {
    consider(*fixed);
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
      return l.cut.to_vector() < r.cut.to_vector();
    });
  } else {
    for (Vertex a : h.vertices()) consider(a);
  }
  return out;
}

struct MinCutResult {
  std::optional<std::size_t> size;  // empty: every cut is larger than s
  VertexSet witness;                // lexicographically least cut of that size
};

// Exact minimum vertex cut when it is at most s (s <= 3). Complete graphs
// have no cut; they report n-1 with an empty witness once s >= n-1.
inline MinCutResult min_cut_size_at_most(const Subgraph& h, std::size_t s) {
  const std::size_t n = h.order();
  VertexSet none(h.universe());
  if (!is_connected(h)) return {0, none};
  if (is_clique(h)) {
    if (n >= 1 && s >= n - 1) return {n - 1, none};
    return {std::nullopt, none};
  }
  if (s > 3) throw PreconditionError("min_cut_size_at_most: s above 3 is not supported");
  if (s >= 1) {
    auto cv = cut_vertices(h);
    if (!cv.empty()) return {1, VertexSet(h.universe(), {cv.front()})};
  }
  if (s >= 2) {
    auto cuts = two_cuts(h);
    if (!cuts.empty()) return {2, cuts.front().cut};
  }
  if (s >= 3) {
    for (Vertex a : h.vertices())
      for (Vertex b = h.vertices().next(a); b != -1; b = h.vertices().next(b)) {
        auto cv = cut_vertices(h.without(VertexSet(h.universe(), {a, b})));
        for (Vertex c = cv.next(b); c != -1; c = cv.next(c)) return {3, VertexSet(h.universe(), {a, b, c})};
      }
  }
  return {std::nullopt, none};
}

// Internally disjoint paths from x to distinct targets, each meeting the
// target set only at its end.
struct PathFan {
  Vertex center = -1;
  std::vector<Vertex> targets;
  std::vector<VertexPath> paths;  // paths[i] runs from center to targets[i]
};

namespace detail {

// Unit vertex-capacity max flow from x to `targets`. Targets in `gate`
// share a single unit between them. Stops after `limit` paths.
inline PathFan disjoint_paths(const Subgraph& h, Vertex x, const VertexSet& targets, std::size_t limit,
                              const VertexSet* gate = nullptr) {
  const Graph& g = h.parent();
  const auto N = static_cast<int>(h.universe());
  const int sink = 2 * N, gate_node = 2 * N + 1;
  struct Arc {
    int to;
    int cap;
    int next;
  };
  std::vector<Arc> arcs;
  std::vector<int> head(static_cast<std::size_t>(2 * N + 2), -1);
  auto add = [&](int a, int b) {
    arcs.push_back({b, 1, head[static_cast<std::size_t>(a)]});
    head[static_cast<std::size_t>(a)] = static_cast<int>(arcs.size()) - 1;
    arcs.push_back({a, 0, head[static_cast<std::size_t>(b)]});
    head[static_cast<std::size_t>(b)] = static_cast<int>(arcs.size()) - 1;
  };
  auto in = [](Vertex v) { return 2 * v; };
  auto out = [](Vertex v) { return 2 * v + 1; };
  bool gated = false;
  for (Vertex v : h.vertices()) {
    if (v == x) continue;
    if (targets.contains(v)) {
      if (gate && gate->contains(v)) {
        add(in(v), gate_node);
        gated = true;
      } else {
        add(in(v), sink);
      }
    } else {
      add(in(v), out(v));
    }
  }
  if (gated) add(gate_node, sink);
  for (Vertex a : h.vertices()) {
    if (a != x && targets.contains(a)) continue;
    for (Vertex b : g.row(a) & h.vertices())
      if (b != x) add(out(a), in(b));
  }

  const int source = out(x);
  std::size_t flow = 0;
  std::vector<int> via(static_cast<std::size_t>(2 * N + 2));
  while (flow < limit) {
    std::fill(via.begin(), via.end(), -2);
    via[static_cast<std::size_t>(source)] = -1;
    std::deque<int> q{source};
    while (!q.empty() && via[static_cast<std::size_t>(sink)] == -2) {
      int a = q.front();
      q.pop_front();
      for (int e = head[static_cast<std::size_t>(a)]; e != -1; e = arcs[static_cast<std::size_t>(e)].next) {
        const auto& arc = arcs[static_cast<std::size_t>(e)];
        if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -2) {
          via[static_cast<std::size_t>(arc.to)] = e;
          q.push_back(arc.to);
        }
      }
    }
    if (via[static_cast<std::size_t>(sink)] == -2) break;
    for (int b = sink; b != source;) {
      int e = via[static_cast<std::size_t>(b)];
      arcs[static_cast<std::size_t>(e)].cap -= 1;
      arcs[static_cast<std::size_t>(e ^ 1)].cap += 1;
      b = arcs[static_cast<std::size_t>(e ^ 1)].to;
    }
    ++flow;
  }

  // Saturated forward arcs (even index, cap 0) carry the flow.
  PathFan fan;
  fan.center = x;
  for (int e = head[static_cast<std::size_t>(source)]; e != -1; e = arcs[static_cast<std::size_t>(e)].next) {
    if ((e & 1) || arcs[static_cast<std::size_t>(e)].cap != 0) continue;
    VertexPath p{x};
    int node = arcs[static_cast<std::size_t>(e)].to;  // in(w)
    while (true) {
      Vertex w = node / 2;
      p.push_back(w);
      if (targets.contains(w)) break;
      int next = -1;
      for (int f = head[static_cast<std::size_t>(out(w))]; f != -1; f = arcs[static_cast<std::size_t>(f)].next)
        if (!(f & 1) && arcs[static_cast<std::size_t>(f)].cap == 0) {
          next = arcs[static_cast<std::size_t>(f)].to;
          break;
        }
      node = next;
    }
    fan.paths.push_back(std::move(p));
  }
  std::sort(fan.paths.begin(), fan.paths.end(), [](const auto& a, const auto& b) { return a.back() < b.back(); });
  for (const auto& p : fan.paths) fan.targets.push_back(p.back());
  return fan;
}

}  // namespace detail

// Menger fan of min(s, |ys|) paths from x to ys. Requires h to be
// s-connected; throws when the flow comes up short.
inline PathFan path_fan(const Subgraph& h, Vertex x, const VertexSet& ys, std::size_t s) {
  if (!h.contains(x) || ys.contains(x)) throw PreconditionError("path_fan: x must be a vertex outside the target set");
  if (!(ys - h.vertices()).empty()) throw PreconditionError("path_fan: targets outside graph");
  const std::size_t want = std::min(s, ys.size());
  auto fan = detail::disjoint_paths(h, x, ys, want);
  if (fan.paths.size() < want) throw PreconditionError("path_fan: graph is not s-connected");
  return fan;
}

}  // namespace hamkit
