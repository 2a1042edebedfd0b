#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hamkit/generators.hpp"
#include "hamkit/ham3.hpp"
#include "hamkit/oracle.hpp"

using namespace hamkit;

TEST(Ham3Uv, Examples) {
  auto p3 = fx::path(3);
  auto yes = ham3::decide_path_uv(p3, 0, 2);
  ASSERT_TRUE(yes.is_yes());
  EXPECT_EQ(yes.witness(), (VertexPath{0, 1, 2}));

  auto no = ham3::decide_path_uv(p3, 0, 1);
  ASSERT_FALSE(no.is_yes());
  EXPECT_EQ(no.obstacle().kind, ObstacleKind::EndpointIsArticulation);
  EXPECT_EQ(no.obstacle().vertices, std::vector<Vertex>{1});

  auto c5 = fx::cycle(5);
  auto cut = ham3::decide_path_uv(c5, 0, 2);
  ASSERT_FALSE(cut.is_yes());
  EXPECT_EQ(cut.obstacle().kind, ObstacleKind::EndpointPairIsTwoCut);

  auto around = ham3::decide_path_uv(c5, 0, 1);
  ASSERT_TRUE(around.is_yes());
  EXPECT_EQ(around.witness(), (VertexPath{0, 4, 3, 2, 1}));
}

TEST(Ham3Uv, SameSideOfArticulation) {
  // Two triangles sharing 0; 1 and 2 sit on the same side of 0.
  auto r = ham3::decide_path_uv(fx::bowtie(), 1, 2);
  ASSERT_FALSE(r.is_yes());
  EXPECT_EQ(r.obstacle().kind, ObstacleKind::SameSideOfArticulation);
  EXPECT_EQ(r.obstacle().vertices, std::vector<Vertex>{0});
  auto across = ham3::decide_path_uv(fx::bowtie(), 1, 3);
  ASSERT_TRUE(across.is_yes());
}

TEST(Ham3From, Examples) {
  auto p3 = fx::path(3);
  auto no = ham3::decide_path_from(p3, 1);
  ASSERT_FALSE(no.is_yes());
  EXPECT_EQ(no.obstacle().kind, ObstacleKind::EndpointIsArticulation);
  auto yes = ham3::decide_path_from(p3, 0);
  ASSERT_TRUE(yes.is_yes());
  EXPECT_EQ(yes.witness(), (VertexPath{0, 1, 2}));
  auto k4 = ham3::decide_path_from(fx::complete(4), 2);
  ASSERT_TRUE(k4.is_yes());
  EXPECT_EQ(k4.witness().front(), 2);
  EXPECT_TRUE(is_path_valid(fx::complete(4), k4.witness(), true));
}

TEST(Ham3Cover, Examples) {
  auto pc = ham3::path_cover_uv(fx::path(3), 1, 0);
  EXPECT_EQ(pc.paths, (std::vector<VertexPath>{{1, 2}, {0}}));
  std::vector<Vertex> starts{0, 1};
  EXPECT_TRUE(is_path_cover_valid(fx::complete(3), ham3::path_cover_uv(fx::complete(3), 0, 1), starts));
  std::vector<Vertex> c5starts{0, 2};
  EXPECT_TRUE(is_path_cover_valid(fx::cycle(5), ham3::path_cover_uv(fx::cycle(5), 0, 2), c5starts));
}

TEST(Ham3, InputChecks) {
  EXPECT_THROW(ham3::decide_path_uv(fx::claw(), 1, 2), ClassError);
  EXPECT_THROW(ham3::decide_path_uv(fx::disjoint_triangles(), 0, 1), PreconditionError);
  EXPECT_THROW(ham3::decide_path_uv(fx::cycle(5), 0, 0), PreconditionError);
  EXPECT_THROW(ham3::decide_path_from(fx::cycle(5), 9), PreconditionError);
}

TEST(Crossover, Examples) {
  auto c5 = fx::cycle(5);
  VertexPath p{0, 1};
  auto step = ham3::crossover_extend(c5, p);
  ASSERT_TRUE(step);
  EXPECT_GT(step->size(), 2u);
  while (auto q = ham3::crossover_extend(c5, p)) p = *q;
  EXPECT_EQ(p, (VertexPath{0, 4, 3, 2, 1}));

  auto k4 = ham3::crossover_extend(fx::complete(4), {0, 1});
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->size(), 3u);
  EXPECT_EQ(k4->front(), 0);
  EXPECT_EQ(k4->back(), 1);

  EXPECT_FALSE(ham3::crossover_extend(c5, {0, 1, 2}));
  EXPECT_THROW(ham3::crossover_extend(c5, {0, 2}), PreconditionError);
}

TEST(Ham3, AgreesWithOracleUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    gen::enumerate_connected(n, [&](const Graph& g, std::uint64_t) {
      if (independent_set_of_size(g, 3)) return;
      oracle::PathTable t(g);
      for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
        auto f = ham3::decide_path_from(g, u);
        ASSERT_EQ(f.is_yes(), t.path_from(u)) << gen::to_corpus_line(g) << " u=" << u;
        if (!f.is_yes()) EXPECT_TRUE(ham3::recheck_from(g, u, f.obstacle()));
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
          if (u == v) continue;
          auto r = ham3::decide_path_uv(g, u, v);
          ASSERT_EQ(r.is_yes(), t.path_between(u, v)) << gen::to_corpus_line(g) << " u=" << u << " v=" << v;
          if (!r.is_yes()) EXPECT_TRUE(ham3::recheck_uv(g, u, v, r.obstacle()));
          EXPECT_TRUE(t.cover_from(u, v));
          ham3::path_cover_uv(g, u, v);  // validates internally
        }
      }
    });
}

TEST(Ham3, RecheckRejectsForgedObstacles) {
  auto c5 = fx::cycle(5);
  Obstacle art{ObstacleKind::EndpointIsArticulation, {0}, {}, ""};
  EXPECT_FALSE(ham3::recheck_uv(c5, 0, 1, art));
  Obstacle pair{ObstacleKind::EndpointPairIsTwoCut, {0, 1}, {}, ""};
  EXPECT_FALSE(ham3::recheck_uv(c5, 0, 1, pair));
  Obstacle side{ObstacleKind::SameSideOfArticulation, {2}, {}, ""};
  EXPECT_FALSE(ham3::recheck_uv(c5, 0, 1, side));
  EXPECT_FALSE(ham3::recheck_from(c5, 0, art));
}
