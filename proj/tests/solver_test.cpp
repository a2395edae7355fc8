#include "hyperclique/solver.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "hyperclique/error.hpp"
#include "hyperclique/kernel.hpp"
#include "hyperclique/matching.hpp"
#include "support/test_graphs.hpp"

namespace hyperclique {
namespace {

using testing::hrg;
using testing::without_coordinates;

using testing::triple_c5_join;

void expect_sound(const Graph& g, const CliqueOutcome& out) {
  EXPECT_TRUE(is_clique(g, out.clique));
  EXPECT_EQ(out.omega_eval, out.clique.size());
  EXPECT_GE(out.omega_eval, out.omega_kernel);
  EXPECT_TRUE(std::is_sorted(out.clique.begin(), out.clique.end()));
  if (out.exact) {
    EXPECT_EQ(out.residual_vertices, 0u);
    EXPECT_EQ(out.residual_edges, 0u);
  }
  const PhaseTimings& t = out.timings;
  for (double x : {t.init, t.kernel, t.cneeo, t.construct, t.indep, t.other, t.total}) EXPECT_GE(x, 0.0);
  EXPECT_NEAR(t.other, std::max(0.0, t.total - (t.init + t.kernel + t.cneeo + t.construct + t.indep)), 1e-9);
}

TEST(Oracle, KnownGraphs) {
  EXPECT_EQ(oracle_max_clique(testing::complete_graph(7)).size(), 7u);
  EXPECT_EQ(oracle_max_clique(testing::cycle_graph(5)).size(), 2u);
  EXPECT_EQ(oracle_max_clique(testing::petersen_graph()).size(), 2u);
  EXPECT_TRUE(oracle_max_clique(Graph()).empty());
  EXPECT_THROW(oracle_max_clique(testing::path_graph(kOracleVertexLimit + 1)), std::length_error);
  EXPECT_NO_THROW(oracle_max_clique(testing::path_graph(kOracleVertexLimit)));
}

TEST(Oracle, LexicographicTieBreak) {
  const std::vector<Edge> edges = {{3, 4}, {4, 5}, {3, 5}, {0, 6}, {6, 2}, {0, 2}};
  EXPECT_EQ(oracle_max_clique(Graph::from_edges(7, edges)), (std::vector<Vertex>{0, 2, 6}));
}

TEST(Oracle, MatchesExhaustiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = testing::erdos_renyi(18, 0.2 + 0.06 * static_cast<double>(seed % 10), seed);
    EXPECT_EQ(oracle_max_clique(g).size(), testing::clique_number_exhaustive(g)) << seed;
  }
}

TEST(Names, RoundTrip) {
  for (Mode m : {Mode::Geo, Mode::NoGeo, Mode::Baseline}) EXPECT_EQ(parse_mode(to_string(m)), m);
  for (Variant v : {Variant::Red, Variant::Skip, Variant::Opt}) EXPECT_EQ(parse_variant(to_string(v)), v);
  EXPECT_THROW(parse_mode("fast"), std::invalid_argument);
  EXPECT_THROW(parse_variant(""), std::invalid_argument);
}

TEST(GeometricOrdering, LongestEdgeFirst) {
  Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}});
  g.set_coordinates({{0.0, 0.0}, {3.0, 0.0}, {4.0, 0.0}});
  const EdgeOrdering o = build_cneeo_geometric(g);
  EXPECT_EQ(o.edges, (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(o.kind, EdgeOrdering::Kind::LengthSorted);
  EXPECT_TRUE(o.complete);
}

TEST(GeometricOrdering, TiesAreLexicographic) {
  Graph g = Graph::from_edges(4, std::vector<Edge>{{2, 3}, {0, 1}, {1, 2}});
  // Points on a ray at unit spacing: every edge has length 1.
  g.set_coordinates({{1.0, 0.5}, {2.0, 0.5}, {3.0, 0.5}, {4.0, 0.5}});
  const EdgeOrdering o = build_cneeo_geometric(g);
  EXPECT_EQ(o.edges, (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(GeometricOrdering, NeedsCoordinates) {
  EXPECT_THROW(build_cneeo_geometric(testing::complete_graph(3)), std::invalid_argument);
}

TEST(Validate, LengthSortedOrderingOnHyperbolicGraphs) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GeneratedGraph gen = hrg(500, 0.6 + 0.075 * static_cast<double>(seed), 10, seed);
    EXPECT_TRUE(validate_cneeo(gen.graph, build_cneeo_geometric(gen.graph))) << seed;
  }
}

TEST(Validate, GreedyOutputIsValid) {
  const Graph g = without_coordinates(hrg(300, 0.75, 10, 4).graph);
  const EdgeOrdering o = build_cneeo_greedy(g);
  ASSERT_TRUE(o.complete);
  EXPECT_TRUE(validate_cneeo(g, o));
}

TEST(Validate, RejectsNonPermutations) {
  const Graph g = testing::complete_graph(4);
  EdgeOrdering o;
  o.edges = g.edges();
  EXPECT_TRUE(validate_cneeo(g, o));
  EXPECT_TRUE(validate_cneeo(Graph(), EdgeOrdering{}));
  o.edges.pop_back();
  EXPECT_FALSE(validate_cneeo(g, o));
  o.edges.push_back(o.edges.front());
  EXPECT_FALSE(validate_cneeo(g, o));
  o.edges.back() = {0, 9};
  EXPECT_FALSE(validate_cneeo(g, o));
}

TEST(Validate, ReversedLengthOrderCanFail) {
  // Shortest-first lets long edges see neighbors outside their lens.
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 40 && failures == 0; ++seed) {
    const GeneratedGraph gen = hrg(400, 0.6, 20, seed);
    EdgeOrdering o = build_cneeo_geometric(gen.graph);
    std::reverse(o.edges.begin(), o.edges.end());
    if (!validate_cneeo(gen.graph, o)) ++failures;
  }
  EXPECT_GT(failures, 0);
}

TEST(GreedyOrdering, CompletesOnHyperbolicGraphsWithoutCoordinates) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = without_coordinates(hrg(300, 0.75, 10, seed).graph);
    const EdgeOrdering o = build_cneeo_greedy(g);
    EXPECT_TRUE(o.complete);
    EXPECT_EQ(o.edges.size(), g.edge_count());
    EXPECT_EQ(o.kind, EdgeOrdering::Kind::Greedy);
  }
}

TEST(GreedyOrdering, Deterministic) {
  const Graph g = without_coordinates(hrg(300, 0.75, 10, 8).graph);
  EXPECT_EQ(build_cneeo_greedy(g).edges, build_cneeo_greedy(g).edges);
}

TEST(GreedyOrdering, EmptyCommonNeighborhoodsAreCobipartite) {
  const Graph c5 = testing::cycle_graph(5);
  const EdgeOrdering o = build_cneeo_greedy(c5);
  EXPECT_TRUE(o.complete);
  EXPECT_EQ(o.edges.size(), 5u);
}

TEST(GreedyOrdering, AbortsOnGadget) {
  const Graph g = triple_c5_join();
  for (const Edge& e : g.edges()) {
    std::vector<Vertex> w = common_neighbors(g, e.u, e.v);
    ASSERT_FALSE(testing::cobipartite_exhaustive(induced_subgraph(g, VertexSet(15, w)).graph));
  }
  const EdgeOrdering o = build_cneeo_greedy(g);
  EXPECT_FALSE(o.complete);
  EXPECT_TRUE(o.edges.empty());
}

TEST(SolveWithOrdering, CompleteGraph) {
  const Graph k4 = testing::complete_graph(4);
  EdgeOrdering o;
  o.edges = k4.edges();
  for (Variant v : {Variant::Red, Variant::Skip, Variant::Opt}) {
    const CliqueOutcome out = solve_with_cneeo(k4, o, v);
    EXPECT_EQ(out.omega_eval, 4u);
    EXPECT_TRUE(out.exact);
    expect_sound(k4, out);
  }
}

TEST(SolveWithOrdering, InvalidCompleteOrderingIsAContractViolation) {
  const Graph g = triple_c5_join();
  EdgeOrdering o;
  o.edges = g.edges();
  o.complete = true;
  EXPECT_THROW(solve_with_cneeo(g, o, Variant::Red), ContractViolation);
}

TEST(SolveWithOrdering, SeedMustBeAClique) {
  const Graph g = testing::path_graph(3);
  EdgeOrdering o;
  o.edges = g.edges();
  const std::vector<Vertex> bad = {0, 2};
  EXPECT_THROW(solve_with_cneeo(g, o, Variant::Opt, bad), std::invalid_argument);
}

TEST(SolveWithOrdering, IncompletePrefixGivesLowerBoundAndResidual) {
  const Graph g = testing::complete_graph(5);
  EdgeOrdering o;
  o.edges = {{0, 1}};
  o.complete = false;
  const CliqueOutcome out = solve_with_cneeo(g, o, Variant::Red);
  EXPECT_FALSE(out.exact);
  EXPECT_EQ(out.omega_eval, 5u);
  EXPECT_EQ(out.residual_edges, 9u);
  EXPECT_EQ(out.residual_vertices, 5u);
}

TEST(SolveWithOrdering, VariantsAgreeWithOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GeneratedGraph gen = hrg(20 + seed % 41, seed % 2 ? 0.6 : 0.9, seed % 3 ? 10 : 4, 1000 + seed);
    const std::size_t omega = oracle_max_clique(gen.graph).size();
    const EdgeOrdering o = build_cneeo_geometric(gen.graph);
    const auto q = initial_clique(gen.graph);
    for (Variant v : {Variant::Red, Variant::Skip, Variant::Opt}) {
      const CliqueOutcome out = solve_with_cneeo(gen.graph, o, v, q);
      ASSERT_EQ(out.omega_eval, omega) << "seed " << seed << " variant " << to_string(v);
      expect_sound(gen.graph, out);
    }
  }
}

TEST(Solve, TrivialGraphs) {
  for (Mode m : {Mode::Geo, Mode::NoGeo, Mode::Baseline}) {
    const CliqueOutcome empty = solve(Graph(), m);
    EXPECT_EQ(empty.omega_eval, 0u);
    EXPECT_TRUE(empty.exact);
    Graph one = Graph::from_edges(1, {});
    one.set_coordinates({{0.5, 1.0}});
    const CliqueOutcome single = solve(one, m);
    EXPECT_EQ(single.omega_eval, 1u);
    EXPECT_TRUE(single.exact);
  }
}

TEST(Solve, GeoNeedsCoordinates) {
  EXPECT_THROW(solve(testing::complete_graph(3), Mode::Geo), std::invalid_argument);
}

TEST(Solve, AllModesAgreeWithOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const double alpha = seed % 3 == 0 ? 0.6 : seed % 3 == 1 ? 0.75 : 0.9;
    const GeneratedGraph gen = hrg(20 + seed % 41, alpha, seed % 2 ? 4 : 10, seed);
    const std::size_t omega = oracle_max_clique(gen.graph).size();
    const Graph plain = without_coordinates(gen.graph);
    for (Variant v : {Variant::Red, Variant::Skip, Variant::Opt}) {
      const CliqueOutcome out = solve(gen.graph, Mode::Geo, v);
      ASSERT_EQ(out.omega_eval, omega) << seed;
      EXPECT_TRUE(out.exact);
      expect_sound(gen.graph, out);
    }
    const CliqueOutcome nogeo = solve(plain, Mode::NoGeo);
    ASSERT_EQ(nogeo.omega_eval, omega) << seed;
    EXPECT_TRUE(nogeo.exact);
    expect_sound(plain, nogeo);
    const CliqueOutcome base = solve(gen.graph, Mode::Baseline);
    ASSERT_EQ(base.omega_eval, omega) << seed;
    EXPECT_TRUE(base.exact);
    expect_sound(gen.graph, base);
  }
}

TEST(Solve, LargerHyperbolicGraphsAgreeAcrossModes) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const GeneratedGraph gen = hrg(20000, 0.7, 10, seed);
    const CliqueOutcome geo = solve(gen.graph, Mode::Geo, Variant::Red);
    EXPECT_TRUE(geo.exact);
    expect_sound(gen.graph, geo);
    EXPECT_EQ(solve(gen.graph, Mode::Geo, Variant::Skip).omega_eval, geo.omega_eval);
    EXPECT_EQ(solve(gen.graph, Mode::Geo, Variant::Opt).omega_eval, geo.omega_eval);
    EXPECT_EQ(solve(gen.graph, Mode::Baseline).omega_eval, geo.omega_eval);
    const CliqueOutcome nogeo = solve(without_coordinates(gen.graph), Mode::NoGeo);
    EXPECT_TRUE(nogeo.exact);
    EXPECT_EQ(nogeo.omega_eval, geo.omega_eval);
  }
}

TEST(Baseline, SmallCases) {
  EXPECT_EQ(solve_baseline(testing::complete_graph(3)).omega_eval, 3u);
  EXPECT_EQ(solve_baseline(Graph::from_edges(2, std::vector<Edge>{{0, 1}})).omega_eval, 2u);
}

TEST(Baseline, NonGeometricInputIsFlaggedInexact) {
  const CliqueOutcome out = solve_baseline(triple_c5_join());
  EXPECT_FALSE(out.exact);
  EXPECT_EQ(out.omega_eval, 6u);
  expect_sound(triple_c5_join(), out);
}

TEST(Heuristic, ExactOnHyperbolicGraphs) {
  const Graph g = without_coordinates(hrg(2000, 0.75, 10, 3).graph);
  const CliqueOutcome out = solve_heuristic(g);
  EXPECT_TRUE(out.exact);
  EXPECT_EQ(out.residual_vertices, 0u);
  EXPECT_EQ(out.residual_edges, 0u);
}

TEST(Heuristic, GadgetReportsResidual) {
  const Graph g = triple_c5_join();
  const CliqueOutcome out = solve_heuristic(g);
  expect_sound(g, out);
  EXPECT_EQ(out.omega_eval, 6u);
  EXPECT_FALSE(out.exact);
  EXPECT_EQ(out.residual_edges, g.edge_count());
  EXPECT_EQ(out.residual_vertices, 15u);
}

TEST(Heuristic, SoundOnRandomGraphs) {
  int inexact = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = testing::erdos_renyi(20 + seed % 41, seed % 2 ? 0.2 : 0.5, seed);
    const CliqueOutcome out = solve_heuristic(g);
    const std::size_t omega = oracle_max_clique(g).size();
    expect_sound(g, out);
    EXPECT_LE(out.omega_eval, omega);
    if (out.exact) {
      EXPECT_EQ(out.omega_eval, omega) << seed;
    } else {
      ++inexact;
    }
  }
  EXPECT_GT(inexact, 0);
}

}  // namespace
}  // namespace hyperclique
