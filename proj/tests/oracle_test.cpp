#include <gtest/gtest.h>

#include "cyclebound/oracle.hpp"
#include "oracles.hpp"

using namespace cyclebound;

namespace {

Graph relabel(const Graph& g, const std::vector<std::size_t>& perm) {
  std::vector<edge> es;
  for (const auto& e : g.edges())
    es.push_back({static_cast<vertex_t>(perm[e.u]), static_cast<vertex_t>(perm[e.v])});
  return Graph::from_edge_list(es, g.vertex_count());
}

}  // namespace

TEST(Isomorphism, InvariantUnderRelabeling) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const auto g = oracle::random_graph(rng, 7);
    std::vector<std::size_t> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(isomorphism_certificate(g), isomorphism_certificate(relabel(g, perm)));
  }
}

TEST(Isomorphism, DistinguishesAndIgnoresIsolated) {
  const std::vector<edge> p3{{0, 1}, {1, 2}};
  const std::vector<edge> two{{0, 1}, {2, 3}};
  EXPECT_NE(isomorphism_certificate(Graph::from_edge_list(p3, 4)),
            isomorphism_certificate(Graph::from_edge_list(two, 4)));
  EXPECT_EQ(isomorphism_certificate(Graph::complete(3)),
            isomorphism_certificate(Graph::from_edge_list(std::vector<edge>{{2, 4}, {4, 5}, {2, 5}}, 6)));
  EXPECT_THROW(isomorphism_certificate(Graph::complete(10)), budget_exceeded);
}

TEST(Isomorphism, CountsAllTypesOnFourVertices) {
  // 11 graphs on 4 vertices up to isomorphism; dropping isolated vertices
  // merges none of them.
  std::vector<Graph> all;
  for (std::size_t e = 0; e <= 6; ++e)
    for (const auto& g : enumerate_graphs(4, e)) all.push_back(g);
  EXPECT_EQ(count_isomorphism_types(all), 11u);
}

TEST(AverageTriangles, SmallSweeps) {
  const auto r = verify_theorem2(4, 6);
  EXPECT_TRUE(r.verified());
  EXPECT_STREQ(r.status(), "verified");
  EXPECT_EQ(r.instances_checked, 15u + 105 + 455 + 1365 + 3003 + 5005);
  EXPECT_EQ(r.witnesses.size(), oracle::choose(6, 4));
  EXPECT_EQ(r.witness_types, 1u);
  for (const auto& w : r.witnesses) EXPECT_TRUE(w.is_padded_complete(4));

  const auto r3 = verify_theorem2(3, 5);
  EXPECT_TRUE(r3.verified());
  EXPECT_EQ(r3.instances_checked, 10u + 45 + 120);
  EXPECT_EQ(r3.witnesses.size(), 10u);
}

TEST(AverageTriangles, DeterministicAcrossJobs) {
  const auto a = verify_theorem2(4, 6, {1, false});
  const auto b = verify_theorem2(4, 6, {3, false});
  EXPECT_EQ(a.instances_checked, b.instances_checked);
  EXPECT_EQ(a.witnesses, b.witnesses);
}

TEST(AverageTriangles, Limits) {
  EXPECT_THROW(verify_theorem2(2, 5), invalid_input);
  EXPECT_THROW(verify_theorem2(5, 4), invalid_input);
  EXPECT_THROW(verify_theorem2(4, 8), budget_exceeded);
  EXPECT_THROW(verify_theorem2(4, 9, {1, true}), budget_exceeded);
}

TEST(MaxTriangles, ExtremalGraphs) {
  const auto r = max_triangles_for_edges(6, 6);
  EXPECT_EQ(r.max_triangles, 4u);
  EXPECT_EQ(r.labeled_witness_count, 15u);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_TRUE(r.witnesses.front().is_padded_complete(4));
  EXPECT_EQ(max_triangles_for_edges(5, 5).max_triangles, 2u);
  EXPECT_EQ(max_triangles_for_edges(2, 5).max_triangles, 0u);
  EXPECT_THROW(max_triangles_for_edges(0, 5), invalid_input);
  EXPECT_THROW(max_triangles_for_edges(11, 5), too_many_edges);
}

TEST(MaxTriangles, NeverAboveSharpBound) {
  for (std::size_t E = 1; E <= 10; ++E) {
    const auto r = max_triangles_for_edges(E, 5);
    EXPECT_LE(static_cast<double>(r.max_triangles), triangle_bound_sharp(static_cast<double>(E), 5) + bound_slack);
  }
}

TEST(WalkSandwich, SmallSweep) {
  const auto r = verify_eq5(4, 5);
  EXPECT_TRUE(r.verified());
  EXPECT_EQ(r.instances_checked, 64u * 5);
  // k = 1 is vacuous on every graph.
  EXPECT_GE(r.instances_vacuous, 64u);
  EXPECT_THROW(verify_eq5(7, 3), invalid_input);
  EXPECT_THROW(verify_eq5(4, 7), invalid_input);
}

TEST(CompleteGraphBound, CompleteGraphs) {
  const auto r = verify_thm4_equality(5, 5);
  EXPECT_EQ(r.exact, 12);
  EXPECT_NEAR(r.bound, 102.0, 1e-9);
  EXPECT_FALSE(r.equal);
  EXPECT_EQ(r.gap, 900);
  const auto t = verify_thm4_equality(4, 3);
  EXPECT_EQ(t.exact, 4);
  EXPECT_TRUE(t.equal);
  EXPECT_EQ(t.gap, 0);
  EXPECT_LT(t.bound_printed, 4.0);
  EXPECT_THROW(verify_thm4_equality(5, 4), not_odd_prime);
  EXPECT_THROW(verify_thm4_equality(10, 3), budget_exceeded);
  EXPECT_THROW(verify_thm4_equality(4, 5), invalid_input);
}

TEST(Probes, WalkCycleIdentity) {
  const auto k5 = probe_eq4(Graph::complete(5), 5);
  EXPECT_TRUE(k5.discrepancy);
  EXPECT_EQ(k5.probe, "eq4");
  const auto gap = std::find_if(k5.exact_values.begin(), k5.exact_values.end(),
                                [](const auto& kv) { return kv.first == "gap"; });
  ASSERT_NE(gap, k5.exact_values.end());
  EXPECT_EQ(gap->second, "900");
  EXPECT_FALSE(probe_eq4(Graph::complete(6), 3).discrepancy);
  EXPECT_FALSE(probe_eq4(Graph::cycle(7), 7).discrepancy);
}

TEST(Probes, CycleBoundConstant) {
  const auto d = probe_thm4(4, 3);
  EXPECT_TRUE(d.discrepancy);
  EXPECT_NE(d.detail.find("printed"), std::string::npos);
  const auto e = probe_thm4(5, 5);
  EXPECT_TRUE(e.discrepancy);
  EXPECT_NE(e.detail.find("not attained"), std::string::npos);
}
