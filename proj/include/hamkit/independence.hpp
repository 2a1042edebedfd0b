#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hamkit/connectivity.hpp"

namespace hamkit {

namespace detail {

// Greedy first-fit partition of `c` into cliques; the count bounds the
// independence number of h[c] from above. Gives up once it reaches `cap`.
inline std::size_t clique_cover_bound(const Subgraph& h, const VertexSet& c, std::size_t cap) {
  const Graph& g = h.parent();
  std::vector<VertexSet> common;  // vertices adjacent to every member so far
  for (Vertex v : c) {
    bool placed = false;
    for (auto& k : common) {
      if (k.contains(v)) {
        k &= g.row(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (common.size() + 1 >= cap) return cap;
      common.push_back(g.row(v));
    }
  }
  return common.size();
}

// Branches over `order` (low degree first: such vertices are the likeliest
// members of a large independent set).
inline bool independent_search(const Subgraph& h, const std::vector<Vertex>& order, VertexSet cand, std::size_t need,
                               std::vector<Vertex>& chosen) {
  if (need == 0) return true;
  if (cand.size() < need) return false;
  if (need > 1 && clique_cover_bound(h, cand, need) < need) return false;
  for (Vertex v : order) {
    if (cand.size() < need) break;
    if (!cand.contains(v)) continue;
    cand.erase(v);
    chosen.push_back(v);
    if (independent_search(h, order, cand - h.parent().row(v), need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

// Independent set of size k, if any, sorted ascending. Among several, the
// search favours low-degree vertices, then low ids.
inline std::optional<std::vector<Vertex>> independent_set_of_size(const Subgraph& h, std::size_t k) {
  std::vector<Vertex> order = h.vertices().to_vector();
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return h.degree(a) < h.degree(b); });
  std::vector<Vertex> chosen;
  if (!detail::independent_search(h, order, h.vertices(), k, chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

inline bool is_independent(const Subgraph& h, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!h.contains(s[i])) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || h.parent().adjacent(s[i], s[j])) return false;
  }
  return true;
}

// Smallest k in {3,4,5} with the graph kK1-free, i.e. alpha <= k-1.
struct ClassLabel {
  int alpha = 0;             // exact when <= 4, otherwise 5 meaning "at least 5"
  std::vector<Vertex> witness;  // an independent set of size alpha
  bool free_of(int k) const { return alpha < k; }
  std::string name() const {
    if (alpha <= 2) return "3K1-free";
    if (alpha == 3) return "4K1-free";
    if (alpha == 4) return "5K1-free";
    return "above-5K1";
  }
};

inline ClassLabel classify(const Subgraph& h) {
  ClassLabel label;
  if (h.order() == 0) return label;
  label.alpha = 1;
  label.witness = {h.vertices().front()};
  for (std::size_t k = 2; k <= 5; ++k) {
    auto s = independent_set_of_size(h, k);
    if (!s) break;
    label.alpha = static_cast<int>(k);
    label.witness = std::move(*s);
  }
  return label;
}

// Partition into cliques proves alpha <= parts.size().
inline bool is_clique_partition(const Subgraph& h, const std::vector<std::vector<Vertex>>& parts) {
  VertexSet seen(h.universe());
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!h.contains(p[i]) || seen.contains(p[i])) return false;
      seen.insert(p[i]);
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (!h.parent().adjacent(p[i], p[j])) return false;
    }
  }
  return seen == h.vertices();
}

inline void require_kk1_free(const Subgraph& h, std::size_t k, const char* op) {
  if (auto s = independent_set_of_size(h, k)) {
    std::string msg = std::string(op) + ": graph has an independent set of size " + std::to_string(k) + ":";
    for (Vertex v : *s) msg += " " + std::to_string(v);
    throw ClassError(msg);
  }
}

}  // namespace hamkit
