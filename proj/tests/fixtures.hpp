#pragma once

#include <vector>

#include "hamkit/graph.hpp"

namespace fx {

using hamkit::Edge;
using hamkit::Graph;
using hamkit::Vertex;

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph::from_edges(static_cast<std::size_t>(a + b), e);
}

// Centre 0, leaves 1, 2, 3.
inline Graph claw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Triangle 0,1,2 with pendants 3-0, 4-1, 5-2.
inline Graph net() { return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

inline Graph chair() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}}); }

// Triangles {0,1,2} and {0,3,4} sharing 0.
inline Graph bowtie() { return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

// K_{2,3} on parts {0,1} / {2,3,4} plus pendant 5 on vertex 0.
inline Graph k23_pendant() {
  return Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {0, 5}});
}

inline Graph disjoint_triangles() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

}  // namespace fx
