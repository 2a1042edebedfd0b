#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hamkit/generators.hpp"
#include "hamkit/independence.hpp"
#include "hamkit/oracle.hpp"

using namespace hamkit;

namespace {

// Connected labeled graphs counted with union-find over raw edge masks.
std::uint64_t union_find_count(int n) {
  std::uint64_t count = 0;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    int bit = 0, parts = n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if ((mask >> bit) & 1U) {
          int a = find(i), b = find(j);
          if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --parts;
          }
        }
    if (parts == 1) ++count;
  }
  return count;
}

}  // namespace

TEST(Enumerate, ConnectedCounts) {
  const std::uint64_t want[] = {0, 1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(union_find_count(n), want[n]);
    EXPECT_EQ(gen::enumerate_connected(static_cast<std::size_t>(n), [](const Graph&, std::uint64_t) {}), want[n]);
  }
}

TEST(Enumerate, AscendingMasksAndRange) {
  std::vector<std::uint64_t> masks;
  gen::enumerate_connected(3, [&](const Graph& g, std::uint64_t m) {
    masks.push_back(m);
    EXPECT_EQ(g.order(), 3u);
  });
  EXPECT_EQ(masks, (std::vector<std::uint64_t>{3, 5, 6, 7}));
  EXPECT_THROW(gen::enumerate_connected(8, [](const Graph&, std::uint64_t) {}), PreconditionError);
  EXPECT_THROW(gen::enumerate_connected(0, [](const Graph&, std::uint64_t) {}), PreconditionError);
}

TEST(Enumerate, MaskBitsFollowPairOrder) {
  auto g = gen::graph_from_mask(4, 0b100001);  // pairs (0,1) and (2,3)
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(SplitMix, ReferenceOutputs) {
  // First outputs for seed 1234567 from the published reference code.
  SplitMix64 r(1234567);
  EXPECT_EQ(r.next(), 6457827717110365317ULL);
  EXPECT_EQ(r.next(), 3203168211198807973ULL);
  EXPECT_EQ(std::string(SplitMix64::name), "splitmix64");
  SplitMix64 u(5);
  for (int i = 0; i < 1000; ++i) {
    double x = u.unit();
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    EXPECT_LT(u.below(7), 7u);
  }
}

TEST(RandomKk1Free, Examples) {
  auto two = gen::random_kk1_free({6, 3, 11, 0.0, false});
  EXPECT_EQ(two.cliques.size(), 2u);
  EXPECT_EQ(component_count(two.graph), 2u);
  EXPECT_EQ(*oracle::exact_alpha(two.graph).value, 2u);

  auto k5 = gen::random_kk1_free({5, 3, 3, 1.0, false});
  EXPECT_EQ(k5.graph.size(), 10u);

  auto repaired = gen::random_kk1_free({6, 3, 11, 0.0, true});
  EXPECT_TRUE(is_connected(repaired.graph));
  EXPECT_EQ(repaired.repair_edges, 1u);
}

TEST(RandomKk1Free, ClassBoundHolds) {
  for (std::size_t k = 3; k <= 5; ++k)
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      gen::GenSpec spec{4 + seed % 11, k, seed, 0.1 * static_cast<double>(seed % 5), seed % 2 == 0};
      auto made = gen::random_kk1_free(spec);
      ASSERT_TRUE(is_clique_partition(made.graph, made.cliques));
      EXPECT_EQ(made.cliques.size(), k - 1);
      EXPECT_LE(*oracle::exact_alpha(made.graph).value, k - 1);
      if (spec.connect) EXPECT_TRUE(is_connected(made.graph));
    }
  auto big = gen::random_kk1_free({50, 5, 7, 0.1, false});
  EXPECT_FALSE(independent_set_of_size(big.graph, 5));
}

TEST(RandomKk1Free, Deterministic) {
  gen::GenSpec spec{30, 4, 99, 0.2, true};
  auto a = gen::random_kk1_free(spec), b = gen::random_kk1_free(spec);
  EXPECT_EQ(gen::to_corpus_line(a.graph), gen::to_corpus_line(b.graph));
  spec.seed = 100;
  EXPECT_NE(gen::to_corpus_line(gen::random_kk1_free(spec).graph), gen::to_corpus_line(a.graph));
}

TEST(Corpus, RoundTrip) {
  auto g = fx::net();
  auto line = gen::to_corpus_line(g);
  EXPECT_EQ(line, "6:6:0-1,0-2,0-3,1-2,1-4,2-5");
  EXPECT_EQ(gen::from_corpus_line(line).edges(), g.edges());
  EXPECT_EQ(gen::from_corpus_line("1:0:").order(), 1u);
  EXPECT_THROW(gen::from_corpus_line("3:2:0-1"), GraphError);
  EXPECT_THROW(gen::from_corpus_line("nonsense"), GraphError);
}
