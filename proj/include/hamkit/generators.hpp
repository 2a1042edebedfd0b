#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hamkit/connectivity.hpp"

namespace hamkit {

// SplitMix64 (Steele, Lea, Flood). Outputs are identical on every platform,
// which the standard library distributions do not promise.
class SplitMix64 {
 public:
  static constexpr const char* name = "splitmix64";
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, bound), rejection-sampled.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

namespace gen {

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Graph whose edges are the set bits of `mask`, pairs (i, j), i < j, in
// lexicographic order from bit 0.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<VertexSet> rows(n, VertexSet(n));
  std::size_t bit = 0;
  for (Vertex i = 0; i < static_cast<Vertex>(n); ++i)
    for (Vertex j = i + 1; j < static_cast<Vertex>(n); ++j, ++bit)
      if ((mask >> bit) & 1U) {
        rows[static_cast<std::size_t>(i)].insert(j);
        rows[static_cast<std::size_t>(j)].insert(i);
      }
  return Graph::from_rows(std::move(rows));
}

// Visits every connected labeled graph on n vertices whose edge mask lies in
// [lo, hi), in mask order. Returns the number visited.
template <class Visitor>
std::uint64_t enumerate_connected_range(std::size_t n, std::uint64_t lo, std::uint64_t hi, Visitor&& visit) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (!is_connected(g)) continue;
    ++count;
    visit(g, mask);
  }
  return count;
}

inline std::uint64_t mask_limit(std::size_t n) {
  if (n < 1 || n > 7) throw PreconditionError("enumerate_connected: n must be between 1 and 7");
  return std::uint64_t{1} << pair_count(n);
}

template <class Visitor>
std::uint64_t enumerate_connected(std::size_t n, Visitor&& visit) {
  return enumerate_connected_range(n, 0, mask_limit(n), std::forward<Visitor>(visit));
}

struct GenSpec {
  std::size_t n = 0;
  std::size_t k = 4;  // result is kK1-free
  std::uint64_t seed = 0;
  double extra_edge_prob = 0.1;
  bool connect = false;  // join components with random cross edges
};

struct Generated {
  Graph graph;
  std::vector<std::vector<Vertex>> cliques;  // certificate: alpha <= cliques.size()
  std::size_t repair_edges = 0;
};

// k-1 random cliques plus independent cross edges. A partition into k-1
// cliques keeps alpha <= k-1; added edges never raise alpha.
inline Generated random_kk1_free(const GenSpec& spec) {
  if (spec.k < 2 || spec.n < spec.k - 1) throw PreconditionError("random_kk1_free: need n >= k-1 >= 1");
  SplitMix64 rng(spec.seed);
  const std::size_t n = spec.n, parts = spec.k - 1;
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  // parts-1 distinct cut points in 1..n-1 give nonempty blocks.
  std::vector<std::size_t> cuts;
  while (cuts.size() + 1 < parts) {
    std::size_t c = 1 + rng.below(n - 1);
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);
  Generated out;
  std::vector<std::size_t> block(n);
  std::size_t start = 0;
  for (std::size_t b = 0; b < cuts.size(); ++b) {
    std::vector<Vertex> part(order.begin() + static_cast<std::ptrdiff_t>(start),
                             order.begin() + static_cast<std::ptrdiff_t>(cuts[b]));
    std::sort(part.begin(), part.end());
    for (Vertex v : part) block[static_cast<std::size_t>(v)] = b;
    out.cliques.push_back(std::move(part));
    start = cuts[b];
  }
  std::vector<VertexSet> rows(n, VertexSet(n));
  auto link = [&](Vertex a, Vertex b) {
    rows[static_cast<std::size_t>(a)].insert(b);
    rows[static_cast<std::size_t>(b)].insert(a);
  };
  for (Vertex i = 0; i < static_cast<Vertex>(n); ++i)
    for (Vertex j = i + 1; j < static_cast<Vertex>(n); ++j) {
      if (block[static_cast<std::size_t>(i)] == block[static_cast<std::size_t>(j)]) link(i, j);
      else if (rng.unit() < spec.extra_edge_prob) link(i, j);
    }
  if (spec.connect) {
    Graph g = Graph::from_rows(rows);
    auto comps = component_sets(g);
    VertexSet joined = comps.front();
    for (std::size_t c = 1; c < comps.size(); ++c) {
      auto a = joined.to_vector();
      auto b = comps[c].to_vector();
      link(a[rng.below(a.size())], b[rng.below(b.size())]);
      joined |= comps[c];
      ++out.repair_edges;
    }
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

// One-line corpus form "n:m:u-v,u-v,...".
inline std::string to_corpus_line(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ':' << g.size() << ':';
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) os << ',';
    os << e.u << '-' << e.v;
    first = false;
  }
  return os.str();
}

inline Graph from_corpus_line(const std::string& line) {
  auto c1 = line.find(':');
  auto c2 = line.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) throw GraphError("corpus line: expected n:m:edges");
  std::size_t n = std::stoul(line.substr(0, c1));
  std::size_t m = std::stoul(line.substr(c1 + 1, c2 - c1 - 1));
  std::vector<Edge> edges;
  std::stringstream rest(line.substr(c2 + 1));
  std::string tok;
  while (std::getline(rest, tok, ',')) {
    if (tok.empty()) continue;
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw GraphError("corpus line: bad edge '" + tok + "'");
    edges.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
  }
  if (edges.size() != m) throw GraphError("corpus line: edge count does not match header");
  return Graph::from_edges(n, edges);
}

}  // namespace gen
}  // namespace hamkit
