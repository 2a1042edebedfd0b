#pragma once

// Exhaustive reference answers for small graphs. Nothing here shares code
// with the structural deciders beyond the graph type and component search.

#include <cstdint>
#include <optional>
#include <vector>

#include "hamkit/connectivity.hpp"

namespace hamkit::oracle {

struct Budget {
  std::size_t max_vertices = 14;
  std::uint64_t node_limit = 20'000'000;
};

enum class Status { found, absent, budget_exceeded };

template <class T>
struct Result {
  Status status = Status::absent;
  std::optional<T> value;
  std::uint64_t nodes = 0;
  bool found() const { return status == Status::found; }
};

namespace detail {

struct Search {
  const Subgraph& h;
  std::uint64_t limit;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  bool tick() {
    if (++nodes > limit) exhausted = true;
    return !exhausted;
  }

  // Extends `path` through all of `left`, ending at `end` when end != -1.
  bool extend(VertexPath& path, VertexSet& left, Vertex end) {
    if (!tick()) return false;
    if (left.empty()) return end == -1 || path.back() == end;
    Vertex cur = path.back();
    if (!prune_ok(cur, left, end)) return false;
    for (Vertex w : h.neighbors(cur) & left) {
      if (w == end && left.size() > 1) continue;
      left.erase(w);
      path.push_back(w);
      if (extend(path, left, end)) return true;
      path.pop_back();
      left.insert(w);
      if (exhausted) return false;
    }
    return false;
  }

  // The rest of the path is a Hamiltonian path of h[left] starting next to
  // cur: left must be connected, and vertices of degree <= 1 there can only
  // sit at the far end.
  bool prune_ok(Vertex cur, const VertexSet& left, Vertex end) {
    Subgraph rest(h.parent(), left);
    if (!is_connected(rest)) return false;
    if (!h.parent().row(cur).intersects(left)) return false;
    int forced_ends = 0;
    for (Vertex w : left) {
      std::size_t d = rest.degree(w) + (h.parent().adjacent(cur, w) ? 1 : 0);
      if (d == 0) return false;
      if (d == 1 && left.size() > 1) {
        if (end != -1 && w != end) return false;
        if (++forced_ends > 1) return false;
      }
    }
    return true;
  }

  std::optional<VertexPath> ham_path(Vertex start, Vertex end) {
    const auto& all = h.vertices();
    for (Vertex s : all) {
      if (start != -1 && s != start) continue;
      if (end != -1 && s == end && all.size() > 1) continue;
      VertexPath path{s};
      VertexSet left = all.without(s);
      if (extend(path, left, end)) return path;
      if (exhausted) return std::nullopt;
    }
    return std::nullopt;
  }
};

}  // namespace detail

// Any Hamiltonian path, optionally with fixed start and/or end, found by
// backtracking in ascending vertex order.
inline Result<VertexPath> brute_ham_path(const Subgraph& h, std::optional<Vertex> start = std::nullopt,
                                         std::optional<Vertex> end = std::nullopt, Budget budget = {}) {
  Result<VertexPath> r;
  if (h.order() > budget.max_vertices) {
    r.status = Status::budget_exceeded;
    return r;
  }
  if (h.order() == 0) return r;
  detail::Search s{h, budget.node_limit};
  auto p = s.ham_path(start.value_or(-1), end.value_or(-1));
  r.nodes = s.nodes;
  if (p) {
    r.status = Status::found;
    r.value = std::move(p);
  } else {
    r.status = s.exhausted ? Status::budget_exceeded : Status::absent;
  }
  return r;
}

// Two disjoint paths from u and from v covering h: u's path is grown by
// backtracking and, once a prefix cannot grow further, the remainder is
// searched for a Hamiltonian path from v.
inline Result<PathCover> brute_pc_uv(const Subgraph& h, Vertex u, Vertex v, Budget budget = {}) {
  Result<PathCover> r;
  if (h.order() > budget.max_vertices) {
    r.status = Status::budget_exceeded;
    return r;
  }
  std::uint64_t nodes = 0;
  bool exhausted = false;
  VertexPath up{u};
  VertexSet taken(h.universe(), {u});

  auto rec = [&](auto&& self) -> std::optional<PathCover> {
    if (++nodes > budget.node_limit) {
      exhausted = true;
      return std::nullopt;
    }
    Subgraph rest(h.parent(), h.vertices() - taken);
    auto comps = component_sets(rest);
    if (comps.size() > 2) return std::nullopt;
    // Longer u-paths first; with two components left, u's path must go on
    // into the one without v.
    for (Vertex w : h.neighbors(up.back()) - taken) {
      if (w == v) continue;
      if (comps.size() == 2 && component_of(rest, v).contains(w)) continue;
      taken.insert(w);
      up.push_back(w);
      auto got = self(self);
      if (got || exhausted) return got;
      up.pop_back();
      taken.erase(w);
    }
    if (comps.size() != 1) return std::nullopt;
    detail::Search s{rest, budget.node_limit - nodes};
    auto p = s.ham_path(v, -1);
    nodes += s.nodes;
    if (s.exhausted) {
      exhausted = true;
      return std::nullopt;
    }
    if (p) return PathCover{{up, *p}};
    return std::nullopt;
  };
  auto got = rec(rec);
  r.nodes = nodes;
  if (got) {
    r.status = Status::found;
    r.value = std::move(got);
  } else {
    r.status = exhausted ? Status::budget_exceeded : Status::absent;
  }
  return r;
}

// Exact independence number by branching on a maximum-degree vertex.
inline Result<std::size_t> exact_alpha(const Subgraph& h, Budget budget = {}) {
  Result<std::size_t> r;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::size_t best = 0;
  auto rec = [&](auto&& self, VertexSet cand, std::size_t size) -> void {
    if (exhausted || ++nodes > budget.node_limit) {
      exhausted = true;
      return;
    }
    if (size + cand.size() <= best) return;
    if (cand.empty()) {
      best = size;
      return;
    }
    Vertex pivot = -1;
    std::size_t deg = 0;
    for (Vertex w : cand) {
      std::size_t d = h.parent().row(w).intersection_size(cand);
      if (pivot == -1 || d > deg) {
        pivot = w;
        deg = d;
      }
    }
    if (deg == 0) {
      best = std::max(best, size + cand.size());
      return;
    }
    self(self, (cand - h.parent().row(pivot)).without(pivot), size + 1);
    self(self, cand.without(pivot), size);
  };
  rec(rec, h.vertices(), 0);
  r.nodes = nodes;
  if (exhausted) {
    r.status = Status::budget_exceeded;
  } else {
    r.status = Status::found;
    r.value = best;
  }
  return r;
}

// Held-Karp style reachability over vertex subsets. For each start s and
// subset S, ends(s, S) is the set of vertices at which a path from s
// covering exactly S can end. Intended for n <= 16.
class PathTable {
 public:
  explicit PathTable(const Graph& g) : n_(static_cast<int>(g.order())) {
    if (n_ > 16) throw PreconditionError("PathTable: at most 16 vertices");
    const std::uint32_t full = (1U << n_);
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= 1U << w;
    ends_.assign(static_cast<std::size_t>(n_) * full, 0);
    for (Vertex s = 0; s < n_; ++s) {
      std::uint32_t* e = &ends_[static_cast<std::size_t>(s) * full];
      e[1U << s] = 1U << s;
      for (std::uint32_t mask = 0; mask < full; ++mask) {
        std::uint32_t ends = e[mask];
        while (ends) {
          int t = __builtin_ctz(ends);
          ends &= ends - 1;
          std::uint32_t nxt = adj_[static_cast<std::size_t>(t)] & ~mask;
          while (nxt) {
            int w = __builtin_ctz(nxt);
            nxt &= nxt - 1;
            e[mask | (1U << w)] |= 1U << w;
          }
        }
      }
    }
  }

  std::uint32_t full_mask() const { return (1U << n_) - 1; }
  std::uint32_t ends(Vertex s, std::uint32_t mask) const {
    return ends_[static_cast<std::size_t>(s) * (1U << n_) + mask];
  }
  bool path_from(Vertex s) const { return ends(s, full_mask()) != 0; }
  bool path_between(Vertex s, Vertex t) const { return (ends(s, full_mask()) >> t) & 1U; }
  bool ham_path() const {
    for (Vertex s = 0; s < n_; ++s)
      if (path_from(s)) return true;
    return false;
  }
  bool cover_from(Vertex u, Vertex v) const {
    const std::uint32_t full = full_mask();
    const std::uint32_t others = full & ~(1U << u) & ~(1U << v);
    // Enumerate subsets of the other vertices that join u's side.
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      std::uint32_t a = sub | (1U << u);
      if (ends(u, a) && ends(v, full & ~a)) return true;
      if (sub == 0) break;
    }
    return false;
  }

 private:
  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::uint32_t> ends_;
};

}  // namespace hamkit::oracle
