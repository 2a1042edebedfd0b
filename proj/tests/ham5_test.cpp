#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hamkit/generators.hpp"
#include "hamkit/ham5.hpp"
#include "hamkit/oracle.hpp"

using namespace hamkit;

TEST(Ham5, Examples) {
  auto k24 = ham5::decide_ham_path(fx::complete_bipartite(2, 4));
  ASSERT_FALSE(k24.is_yes());
  EXPECT_EQ(k24.obstacle().kind, ObstacleKind::TwoCutWithFourComponents);
  EXPECT_EQ(k24.obstacle().vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(k24.obstacle().sets.size(), 4u);

  auto pend = ham5::decide_ham_path(fx::k23_pendant());
  ASSERT_FALSE(pend.is_yes());
  EXPECT_EQ(pend.obstacle().kind, ObstacleKind::NoGoodStartInQ2);
  EXPECT_EQ(pend.obstacle().vertices, std::vector<Vertex>{0});
  EXPECT_FALSE(oracle::brute_ham_path(fx::k23_pendant()).found());

  auto c5 = ham5::decide_ham_path(fx::cycle(5));
  ASSERT_TRUE(c5.is_yes());

  auto claw = ham5::decide_ham_path(fx::claw());
  ASSERT_FALSE(claw.is_yes());
  EXPECT_EQ(claw.obstacle().kind, ObstacleKind::ArticulationWithThreeComponents);
  EXPECT_EQ(claw.obstacle().vertices, std::vector<Vertex>{0});
}

TEST(Ham5, BothSidesStartPair) {
  auto bow = fx::bowtie();
  auto pair = ham5::both_sides_3k1_start_pair(bow, 0, VertexSet(5, {1, 2}), VertexSet(5, {3, 4}));
  ASSERT_TRUE(pair);
  EXPECT_EQ(*pair, std::make_pair(Vertex{1}, Vertex{3}));

  auto p5 = fx::path(5);
  auto mid = ham5::both_sides_3k1_start_pair(p5, 2, VertexSet(5, {0, 1}), VertexSet(5, {3, 4}));
  ASSERT_TRUE(mid);
  EXPECT_EQ(*mid, std::make_pair(Vertex{1}, Vertex{3}));

  // x = 3 sees only the middle of the path 0-1-2 on its left.
  auto g = Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}});
  EXPECT_FALSE(ham5::both_sides_3k1_start_pair(g, 3, VertexSet(6, {0, 1, 2}), VertexSet(6, {4, 5})));
  EXPECT_FALSE(oracle::brute_ham_path(g).found());
}

TEST(Ham5, AgreesWithOracleUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    gen::enumerate_connected(n, [&](const Graph& g, std::uint64_t) {
      if (independent_set_of_size(g, 5)) return;
      oracle::PathTable t(g);
      auto r = ham5::decide_ham_path(g);
      ASSERT_EQ(r.is_yes(), t.ham_path()) << gen::to_corpus_line(g);
      if (r.is_yes()) EXPECT_TRUE(is_path_valid(g, r.witness(), true));
      else EXPECT_TRUE(ham5::recheck(g, r.obstacle())) << gen::to_corpus_line(g);
    });
}

TEST(Ham5, RandomTwoConnectedCases) {
  // Larger 5K1-free graphs, where 2-cut routing actually has work to do.
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    gen::GenSpec spec{9, 5, seed, 0.15, true};
    auto g = gen::random_kk1_free(spec).graph;
    auto r = ham5::decide_ham_path(g);
    auto o = oracle::brute_ham_path(g);
    ASSERT_NE(o.status, oracle::Status::budget_exceeded);
    ASSERT_EQ(r.is_yes(), o.found()) << gen::to_corpus_line(g);
    if (!r.is_yes()) EXPECT_TRUE(ham5::recheck(g, r.obstacle()));
    ++checked;
  }
  EXPECT_EQ(checked, 400u);
}

TEST(Ham5, InputChecks) {
  EXPECT_THROW(ham5::decide_ham_path(fx::complete_bipartite(1, 5)), ClassError);
  EXPECT_THROW(ham5::decide_ham_path(fx::disjoint_triangles()), PreconditionError);
}

TEST(Ham5, RecheckRejectsForgedObstacles) {
  auto k24 = fx::complete_bipartite(2, 4);
  EXPECT_FALSE(ham5::recheck(k24, {ObstacleKind::TwoCutWithFourComponents, {0, 2}, {}, ""}));
  EXPECT_FALSE(ham5::recheck(fx::cycle(5), {ObstacleKind::NoGoodStartInQ2, {0}, {}, ""}));
}
