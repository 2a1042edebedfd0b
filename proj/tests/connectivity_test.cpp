#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hamkit/generators.hpp"
#include "hamkit/harness.hpp"

using namespace hamkit;

namespace {

std::vector<std::vector<Vertex>> as_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.push_back(s.to_vector());
  return out;
}

// Vertex connectivity from Menger: the minimum over nonadjacent s, t of the
// number of disjoint s-N(t) paths; complete graphs give n-1.
std::size_t flow_connectivity(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::size_t best = g.order() ? g.order() - 1 : 0;
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      Subgraph h = Subgraph(g).without(t);
      auto fan = detail::disjoint_paths(h, s, g.row(t), g.order());
      best = std::min(best, fan.paths.size());
    }
  return best;
}

// Reference pairs for two_cuts: every pair whose removal disconnects.
std::vector<std::vector<Vertex>> brute_two_cuts(const Graph& g, std::optional<Vertex> fixed) {
  std::vector<std::vector<Vertex>> out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (fixed && a != *fixed && b != *fixed) continue;
      if (is_cut(g, VertexSet(g.order(), {a, b}))) out.push_back({a, b});
    }
  return out;
}

}  // namespace

TEST(Components, Examples) {
  auto claw = components(fx::claw(), VertexSet(4, {0}));
  EXPECT_EQ(as_lists(claw.components), (std::vector<std::vector<Vertex>>{{1}, {2}, {3}}));
  auto c5 = components(fx::cycle(5), VertexSet(5, {0, 2}));
  EXPECT_EQ(as_lists(c5.components), (std::vector<std::vector<Vertex>>{{1}, {3, 4}}));
  EXPECT_EQ(c5.index_of(4), 1);
  EXPECT_EQ(c5.index_of(0), -1);
  auto k4 = components(fx::complete(4), VertexSet(4, {0}));
  EXPECT_EQ(as_lists(k4.components), (std::vector<std::vector<Vertex>>{{1, 2, 3}}));
}

TEST(Components, PartitionTheRest) {
  gen::enumerate_connected(5, [](const Graph& g, std::uint64_t) {
    for (Vertex x = 0; x < 5; ++x) {
      auto d = components(g, VertexSet(5, {x}));
      VertexSet all(5);
      for (const auto& c : d.components) {
        EXPECT_FALSE(all.intersects(c));
        all |= c;
        EXPECT_TRUE(is_connected(Subgraph(g, c)));
      }
      EXPECT_EQ(all, g.vertices().without(x));
    }
  });
}

TEST(ArticulationPoints, Examples) {
  EXPECT_EQ(articulation_points(fx::path(3)).to_vector(), std::vector<Vertex>{1});
  EXPECT_TRUE(articulation_points(fx::cycle(5)).empty());
  EXPECT_EQ(articulation_points(fx::net()).to_vector(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_THROW(articulation_points(fx::disjoint_triangles()), PreconditionError);
}

TEST(ArticulationPoints, MatchRemovalDefinition) {
  for (std::size_t n = 1; n <= 6; ++n)
    gen::enumerate_connected(n, [&](const Graph& g, std::uint64_t) {
      auto arts = articulation_points(g);
      for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        EXPECT_EQ(arts.contains(v), component_count(Subgraph(g).without(v)) > 1) << gen::to_corpus_line(g);
    });
}

TEST(MinCut, Examples) {
  auto p3 = min_cut_size_at_most(fx::path(3), 1);
  ASSERT_TRUE(p3.size);
  EXPECT_EQ(*p3.size, 1u);
  EXPECT_EQ(p3.witness.to_vector(), std::vector<Vertex>{1});

  auto c5 = min_cut_size_at_most(fx::cycle(5), 3);
  ASSERT_TRUE(c5.size);
  EXPECT_EQ(*c5.size, 2u);
  EXPECT_EQ(c5.witness.size(), 2u);
  EXPECT_TRUE(is_cut(fx::cycle(5), c5.witness));

  EXPECT_FALSE(min_cut_size_at_most(fx::complete(4), 2).size);
  EXPECT_EQ(*min_cut_size_at_most(fx::complete(4), 3).size, 3u);
}

TEST(MinCut, AgreesWithFlowAndSubsetSearch) {
  auto check = [](const Graph& g) {
    std::size_t kappa = flow_connectivity(g);
    ASSERT_EQ(kappa, harness::brute_connectivity(g)) << gen::to_corpus_line(g);
    auto r = min_cut_size_at_most(g, 3);
    if (kappa <= 3) {
      ASSERT_TRUE(r.size) << gen::to_corpus_line(g);
      EXPECT_EQ(*r.size, kappa) << gen::to_corpus_line(g);
      if (kappa < g.order() - 1) EXPECT_TRUE(is_cut(g, r.witness)) << gen::to_corpus_line(g);
    } else {
      EXPECT_FALSE(r.size) << gen::to_corpus_line(g);
    }
  };
  for (std::size_t n = 2; n <= 6; ++n) gen::enumerate_connected(n, [&](const Graph& g, std::uint64_t) { check(g); });
  // n = 7 by sampling: the full space is covered by the acceptance sweep.
  SplitMix64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    auto g = gen::graph_from_mask(7, rng.next() & ((std::uint64_t{1} << 21) - 1));
    if (is_connected(g)) check(g);
  }
}

TEST(TwoCuts, Examples) {
  std::vector<std::vector<Vertex>> got;
  for (const auto& c : two_cuts(fx::cycle(5))) got.push_back(c.cut.to_vector());
  EXPECT_EQ(got, (std::vector<std::vector<Vertex>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));
  EXPECT_TRUE(two_cuts(fx::complete(4)).empty());

  got.clear();
  for (const auto& c : two_cuts(fx::path(4), 1)) got.push_back(c.cut.to_vector());
  EXPECT_EQ(got, brute_two_cuts(fx::path(4), 1));
  EXPECT_EQ(got, (std::vector<std::vector<Vertex>>{{1, 2}, {1, 3}}));
}

TEST(TwoCuts, MatchBruteForce) {
  for (std::size_t n = 3; n <= 6; ++n)
    gen::enumerate_connected(n, [&](const Graph& g, std::uint64_t) {
      std::vector<std::vector<Vertex>> got;
      for (const auto& c : two_cuts(g)) {
        got.push_back(c.cut.to_vector());
        EXPECT_EQ(c.count(), components(g, c.cut).count());
      }
      ASSERT_EQ(got, brute_two_cuts(g, std::nullopt)) << gen::to_corpus_line(g);
      Vertex f = static_cast<Vertex>(n / 2);
      got.clear();
      for (const auto& c : two_cuts(g, f)) got.push_back(c.cut.to_vector());
      ASSERT_EQ(got, brute_two_cuts(g, f)) << gen::to_corpus_line(g);
    });
}

TEST(PathFan, Examples) {
  auto k4 = path_fan(fx::complete(4), 0, VertexSet(4, {1, 2, 3}), 3);
  EXPECT_EQ(k4.paths, (std::vector<VertexPath>{{0, 1}, {0, 2}, {0, 3}}));

  auto c5 = path_fan(fx::cycle(5), 0, VertexSet(5, {2, 3}), 2);
  EXPECT_EQ(c5.paths, (std::vector<VertexPath>{{0, 1, 2}, {0, 4, 3}}));
  EXPECT_EQ(c5.targets, (std::vector<Vertex>{2, 3}));

  auto p3 = path_fan(fx::path(3), 0, VertexSet(3, {2}), 1);
  EXPECT_EQ(p3.paths, (std::vector<VertexPath>{{0, 1, 2}}));

  EXPECT_THROW(path_fan(fx::path(4), 0, VertexSet(4, {2, 3}), 2), PreconditionError);
}

TEST(PathFan, DisjointAndTouchTargetsOnlyAtEnds) {
  for (std::size_t n = 3; n <= 6; ++n)
    gen::enumerate_connected(n, [&](const Graph& g, std::uint64_t mask) {
      std::size_t s = harness::brute_connectivity(g);
      Vertex x = static_cast<Vertex>(mask % n);
      VertexSet ys = g.vertices().without(x);
      // Targets: every other vertex not adjacent to x, else all of them.
      VertexSet far = ys - g.row(x);
      if (!far.empty()) ys = far;
      auto fan = path_fan(g, x, ys, s);
      ASSERT_EQ(fan.paths.size(), std::min(s, ys.size()));
      VertexSet used(n);
      for (const auto& p : fan.paths) {
        EXPECT_EQ(p.front(), x);
        EXPECT_TRUE(is_path_valid(g, p, false));
        EXPECT_TRUE(ys.contains(p.back()));
        for (std::size_t i = 1; i < p.size(); ++i) {
          EXPECT_FALSE(used.contains(p[i])) << "paths share an inner vertex";
          used.insert(p[i]);
          if (i + 1 < p.size()) EXPECT_FALSE(ys.contains(p[i])) << "path passes through a target";
        }
      }
    });
}

TEST(Cliques, Basics) {
  EXPECT_TRUE(is_clique(fx::complete(5)));
  EXPECT_FALSE(is_clique(fx::cycle(4)));
  EXPECT_TRUE(is_biconnected(fx::cycle(4)));
  EXPECT_FALSE(is_biconnected(fx::path(3)));
}
