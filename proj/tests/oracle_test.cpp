#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "hamkit/generators.hpp"
#include "hamkit/oracle.hpp"

using namespace hamkit;

namespace {

// Permutation search: the slowest, plainest reference there is.
bool permutation_path(const Graph& g, int start, int end) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (start >= 0 && p.front() != start) continue;
    if (end >= 0 && p.back() != end) continue;
    if (is_path_valid(g, p, true)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST(BruteHamPath, Examples) {
  auto c5 = fx::cycle(5);
  EXPECT_EQ(oracle::brute_ham_path(c5, 0, 2).status, oracle::Status::absent);
  auto r = oracle::brute_ham_path(c5, 0, 1);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(*r.value, (VertexPath{0, 4, 3, 2, 1}));
  auto k1 = oracle::brute_ham_path(fx::complete(1));
  ASSERT_TRUE(k1.found());
  EXPECT_EQ(*k1.value, VertexPath{0});
}

TEST(BrutePc, Examples) {
  auto claw = oracle::brute_pc_uv(fx::claw(), 1, 2);
  ASSERT_TRUE(claw.found());
  EXPECT_EQ(claw.value->paths, (std::vector<VertexPath>{{1, 0, 3}, {2}}));
  auto k2 = oracle::brute_pc_uv(fx::complete(2), 0, 1);
  ASSERT_TRUE(k2.found());
  EXPECT_EQ(k2.value->paths, (std::vector<VertexPath>{{0}, {1}}));
  EXPECT_EQ(oracle::brute_pc_uv(fx::claw(), 0, 1).status, oracle::Status::absent);
}

TEST(ExactAlpha, Examples) {
  EXPECT_EQ(*oracle::exact_alpha(fx::cycle(5)).value, 2u);
  EXPECT_EQ(*oracle::exact_alpha(fx::claw()).value, 3u);
  EXPECT_EQ(*oracle::exact_alpha(fx::net()).value, 3u);
}

TEST(Budget, Exceeded) {
  auto k10 = fx::complete(10);
  EXPECT_EQ(oracle::brute_ham_path(k10, 0, std::nullopt, {20, 3}).status, oracle::Status::budget_exceeded);
  EXPECT_EQ(oracle::brute_ham_path(fx::complete(15)).status, oracle::Status::budget_exceeded);
}

// The backtracking search, the subset table and plain permutation search
// must all agree.
TEST(Oracles, AgreeUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    gen::enumerate_connected(n, [&](const Graph& g, std::uint64_t mask) {
      oracle::PathTable t(g);
      ASSERT_EQ(t.ham_path(), permutation_path(g, -1, -1));
      ASSERT_EQ(t.ham_path(), oracle::brute_ham_path(g).found());
      for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
        auto r = oracle::brute_ham_path(g, u);
        ASSERT_EQ(r.found(), t.path_from(u)) << gen::to_corpus_line(g);
        if (r.found()) EXPECT_TRUE(is_path_valid(g, *r.value, true) && r.value->front() == u);
        if (mask % 7 == 0) ASSERT_EQ(t.path_from(u), permutation_path(g, u, -1));
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
          if (u == v) continue;
          auto b = oracle::brute_ham_path(g, u, v);
          ASSERT_EQ(b.found(), t.path_between(u, v)) << gen::to_corpus_line(g);
          auto pc = oracle::brute_pc_uv(g, u, v);
          ASSERT_EQ(pc.found(), t.cover_from(u, v)) << gen::to_corpus_line(g) << " u=" << u << " v=" << v;
          std::vector<Vertex> starts{u, v};
          if (pc.found()) EXPECT_TRUE(is_path_cover_valid(g, *pc.value, starts));
        }
      }
    });
}

TEST(Oracles, CoverTableMatchesDefinitionOnDisconnectedGraphs) {
  for (std::uint64_t mask = 0; mask < gen::mask_limit(5); ++mask) {
    auto g = gen::graph_from_mask(5, mask);
    oracle::PathTable t(g);
    for (Vertex u = 0; u < 5; ++u)
      for (Vertex v = 0; v < 5; ++v)
        if (u != v) ASSERT_EQ(oracle::brute_pc_uv(g, u, v).found(), t.cover_from(u, v)) << gen::to_corpus_line(g);
  }
}
