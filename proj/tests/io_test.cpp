#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "hamkit/io.hpp"

using namespace hamkit;

namespace {

io::ParsedGraph edge_list(const std::string& text) {
  std::istringstream in(text);
  return io::read_edge_list(in);
}

io::ParsedGraph dimacs(const std::string& text) {
  std::istringstream in(text);
  return io::read_dimacs(in);
}

std::size_t error_line(const std::string& text, bool is_dimacs = false) {
  try {
    is_dimacs ? dimacs(text) : edge_list(text);
  } catch (const io::ParseError& e) {
    return e.line_no;
  }
  return 0;
}

}  // namespace

TEST(EdgeList, NumericIds) {
  auto pg = edge_list("# comment\n3 2\n0 1\n1 2  # trailing\n");
  EXPECT_FALSE(pg.relabeled);
  EXPECT_EQ(pg.graph.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(pg.labels, (std::vector<std::string>{"0", "1", "2"}));
}

TEST(EdgeList, IsolatedVertices) {
  auto pg = edge_list("4 1\n2 3\n");
  EXPECT_EQ(pg.graph.order(), 4u);
  EXPECT_EQ(pg.graph.degree(0), 0u);
}

TEST(EdgeList, ArbitraryLabels) {
  auto pg = edge_list("3 2\nb a\na c\n");
  EXPECT_TRUE(pg.relabeled);
  EXPECT_EQ(pg.labels, (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(pg.graph.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  // 1-based integers are not the identity either.
  auto one = edge_list("2 1\n1 2\n");
  EXPECT_TRUE(one.relabeled);
  EXPECT_EQ(one.labels, (std::vector<std::string>{"1", "2"}));
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(error_line("3 2\n0 1\n1 x y\n"), 3u);
  EXPECT_EQ(error_line("3\n"), 1u);
  EXPECT_EQ(error_line("3 1\n1 1\n"), 2u);
  EXPECT_EQ(error_line("3 2\n0 1\n1 0\n"), 3u);  // duplicate
  EXPECT_EQ(error_line("2 1\na b\n"), 0u);
  EXPECT_EQ(error_line("2 2\na b\nb c\n"), 3u);  // too many labels
  EXPECT_NE(error_line("3 3\n0 1\n"), 0u);       // count mismatch
  EXPECT_NE(error_line(""), 0u);
  try {
    edge_list("3 2\n0 1\n1 x y\n");
  } catch (const io::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Dimacs, ReadAndConvert) {
  auto pg = dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(pg.graph.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(pg.labels.front(), "1");
  EXPECT_EQ(error_line("p edge 3 1\ne 0 1\n", true), 2u);
  EXPECT_EQ(error_line("e 1 2\n", true), 1u);
  EXPECT_EQ(error_line("p edge 2 1\nx\n", true), 2u);
}

TEST(Writers, RoundTrip) {
  auto g = fx::net();
  std::ostringstream a, b;
  io::write_edge_list(a, g);
  io::write_dimacs(b, g);
  EXPECT_EQ(edge_list(a.str()).graph.edges(), g.edges());
  EXPECT_EQ(dimacs(b.str()).graph.edges(), g.edges());
  EXPECT_EQ(io::digest(edge_list(a.str()).graph), io::digest(g));
  EXPECT_NE(io::digest(fx::cycle(6)), io::digest(g));
}
