#include <gtest/gtest.h>

#include "cyclebound/cycles.hpp"
#include "oracles.hpp"

using namespace cyclebound;

TEST(Triangles, KnownGraphs) {
  EXPECT_EQ(count_triangles(Graph::complete(4)), 4);
  EXPECT_EQ(count_triangles(Graph::complete(10)), 120);
  EXPECT_EQ(count_triangles(Graph::cycle(4)), 0);
  EXPECT_EQ(count_triangles(Graph::path(5)), 0);
}

TEST(Triangles, MatchOracle) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto g = oracle::random_graph(rng, 4 + i % 14);
    EXPECT_EQ(count_triangles(g), BigInt(oracle::triangles(g)));
  }
}

TEST(SimpleCycles, CompleteGraphClosedForm) {
  // K_n has C(n,k) (k-1)!/2 simple k-cycles.
  for (std::size_t n = 3; n <= 8; ++n)
    for (unsigned k = 3; k <= n; ++k) {
      BigInt expect = BigInt(oracle::choose(n, k));
      for (unsigned j = 2; j < k; ++j) expect *= j;
      expect /= 2;
      EXPECT_EQ(count_simple_cycles(Graph::complete(n), k), expect) << n << " " << k;
    }
}

TEST(SimpleCycles, SpecValues) {
  EXPECT_EQ(count_simple_cycles(Graph::complete(5), 5), 12);
  EXPECT_EQ(count_simple_cycles(Graph::cycle(6), 6), 1);
  EXPECT_EQ(count_simple_cycles(Graph::cycle(6), 5), 0);
}

TEST(SimpleCycles, MatchPermutationOracle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 25; ++i) {
    const auto g = oracle::random_graph(rng, 4 + i % 4, 0.6);
    for (unsigned k = 3; k <= g.vertex_count(); ++k)
      EXPECT_EQ(count_simple_cycles(g, k), BigInt(oracle::simple_cycles(g, k))) << k;
  }
}

TEST(SimpleCycles, Errors) {
  EXPECT_THROW(count_simple_cycles(Graph::complete(4), 2), invalid_input);
  EXPECT_THROW(count_simple_cycles(Graph::complete(4), 5), invalid_input);
  EXPECT_THROW(count_simple_cycles(Graph::complete(12), 12, 1000), budget_exceeded);
}

TEST(CountCycles, ByLength) {
  const auto c = count_cycles(Graph::complete(5), 5);
  EXPECT_EQ(c.triangle_count, 10);
  EXPECT_EQ(c.by_length.at(3), 10);
  EXPECT_EQ(c.by_length.at(4), 15);
  EXPECT_EQ(c.by_length.at(5), 12);
}

TEST(WalkCycleGap, TriangleIdentityHoldsAndK5Fails) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(walk_cycle_gap(oracle::random_graph(rng, 8), 3), 0);
  EXPECT_EQ(walk_cycle_gap(Graph::complete(5), 5), 900);
  EXPECT_EQ(walk_cycle_gap(Graph::cycle(5), 5), 0);
}

TEST(WalkClasses, MatchSetOracle) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    const auto g = oracle::random_graph(rng, 2 + i % 5);
    for (unsigned k = 1; k <= 6; ++k)
      EXPECT_EQ(closed_walk_classes(g, k), BigInt(oracle::walk_classes(g, k))) << k;
  }
}

TEST(WalkClasses, SmallCases) {
  const auto edge = Graph::path(2);
  EXPECT_EQ(closed_walk_classes(edge, 1), 0);
  EXPECT_EQ(closed_walk_classes(edge, 2), 1);
  EXPECT_EQ(closed_walk_classes(edge, 3), 0);
  EXPECT_EQ(closed_walk_classes(Graph::complete(3), 3), 1);
}

TEST(WalkClasses, BracketTrace) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    const auto g = oracle::random_graph(rng, 6);
    for (unsigned k = 1; k <= 7; ++k) {
      const BigInt tr = trace_power(g, k);
      const BigInt c = closed_walk_classes(g, k);
      EXPECT_LE(tr, BigInt(2 * k) * c);
      EXPECT_LE(BigInt(2) * c, tr);
    }
  }
}

TEST(WalkClasses, Limits) {
  EXPECT_THROW(closed_walk_classes(Graph::complete(7), 3), invalid_input);
  EXPECT_THROW(closed_walk_classes(Graph::complete(4), 9), invalid_input);
  EXPECT_THROW(closed_walk_classes(Graph::complete(4), 0), invalid_input);
  EXPECT_THROW(closed_walk_classes(Graph::complete(6), 8, {6, 8, 100}), budget_exceeded);
}
