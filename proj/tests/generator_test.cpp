#include "hyperclique/generator.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "support/test_graphs.hpp"

namespace hyperclique {
namespace {

using testing::hrg;

TEST(SamplePoints, SinglePointInsideDisk) {
  const HrgParams p = HrgParams::make(1, 0.75, 3.0);
  const auto pts = sample_points(p, SampleSeed{42});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_GE(pts[0].r, 0.0);
  EXPECT_LE(pts[0].r, p.R);
  EXPECT_GE(pts[0].phi, 0.0);
  EXPECT_LT(pts[0].phi, kTwoPi);
}

TEST(SamplePoints, DeterministicPerSeed) {
  const HrgParams p = HrgParams::make(1000, 0.75, 0.0);
  EXPECT_EQ(sample_points(p, SampleSeed{5}), sample_points(p, SampleSeed{5}));
  EXPECT_NE(sample_points(p, SampleSeed{5}), sample_points(p, SampleSeed{6}));
}

TEST(SamplePoints, RadialCdfMatchesOriginBallMeasure) {
  const HrgParams p = HrgParams::make(1000000, 0.75, 0.0);
  auto pts = sample_points(p, SampleSeed{11});
  std::vector<double> r(pts.size());
  std::transform(pts.begin(), pts.end(), r.begin(), [](const PolarPoint& q) { return q.r; });
  std::sort(r.begin(), r.end());
  const double n = static_cast<double>(r.size());
  double ks = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double F = mu_origin_ball(r[i], p);
    ks = std::max({ks, std::fabs(F - i / n), std::fabs(F - (i + 1) / n)});
  }
  EXPECT_LT(ks, 0.002);
}

TEST(SamplePoints, AnglesAreUniform) {
  const HrgParams p = HrgParams::make(200000, 0.75, 0.0);
  auto pts = sample_points(p, SampleSeed{12});
  std::vector<double> phi(pts.size());
  std::transform(pts.begin(), pts.end(), phi.begin(), [](const PolarPoint& q) { return q.phi; });
  std::sort(phi.begin(), phi.end());
  const double n = static_cast<double>(phi.size());
  double ks = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double F = phi[i] / kTwoPi;
    ks = std::max({ks, std::fabs(F - i / n), std::fabs(F - (i + 1) / n)});
  }
  EXPECT_LT(ks, 1.63 / std::sqrt(n));  // 1% level
}

TEST(SamplePoints, LargerAlphaPushesPointsOutward) {
  auto median_r = [](double alpha) {
    const HrgParams p = HrgParams::make(20000, alpha, 0.0);
    auto pts = sample_points(p, SampleSeed{3});
    std::vector<double> r;
    for (const auto& q : pts) r.push_back(q.r);
    std::nth_element(r.begin(), r.begin() + r.size() / 2, r.end());
    return r[r.size() / 2];
  };
  EXPECT_GT(median_r(0.9), median_r(0.55));
}

TEST(BuildGraph, DistanceExactlyThresholdIsAnEdge) {
  const std::vector<PolarPoint> pts = {{3.0, 0.2}, {4.0, 1.7}, {0.5, 4.0}};
  const double d = distance(pts[0], pts[1]);
  // With n = 1, R = 2 ln 1 + C = C exactly.
  const HrgParams p = HrgParams::make(1, 0.75, d);
  ASSERT_EQ(p.R, d);
  const Graph g = build_graph_naive(pts, p);
  EXPECT_TRUE(g.adjacent(0, 1));
  const Graph b = build_graph_bucketed(pts, p);
  EXPECT_TRUE(b.adjacent(0, 1));
  EXPECT_TRUE(g.same_structure(b));
}

TEST(BuildGraph, NaiveAndBucketedAgree) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    for (double alpha : {0.55, 0.75, 0.95}) {
      for (std::size_t n : {300u, 3000u}) {
        const double C = solve_C_for_avg_degree(n, alpha, 10);
        const HrgParams p = HrgParams::make(n, alpha, C);
        const auto pts = sample_points(p, SampleSeed{seed});
        const Graph a = build_graph_naive(pts, p);
        const Graph b = build_graph_bucketed(pts, p);
        EXPECT_TRUE(a.same_structure(b)) << "seed " << seed << " alpha " << alpha << " n " << n;
        EXPECT_EQ(a.coordinates().size(), n);
      }
    }
  }
}

TEST(BuildGraph, EdgesAreExactlyTheDistancePredicate) {
  const GeneratedGraph gen = hrg(6000, 0.7, 8, 21);
  const Graph& g = gen.graph;
  for (const Edge& e : g.edges()) {
    ASSERT_LE(distance(g.coordinate(e.u), g.coordinate(e.v)), gen.params.R);
  }
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.vertex_count() - 1));
  for (int i = 0; i < 200000; ++i) {
    const Vertex u = pick(rng), v = pick(rng);
    if (u == v) continue;
    ASSERT_EQ(g.adjacent(u, v), distance(g.coordinate(u), g.coordinate(v)) <= gen.params.R);
  }
}

TEST(BuildGraph, InnerHalfDiskIsAClique) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const GeneratedGraph gen = hrg(5000, 0.6, 10, seed);
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < gen.graph.vertex_count(); ++v) {
      if (gen.graph.coordinate(v).r <= gen.params.R / 2) inner.push_back(v);
    }
    EXPECT_TRUE(is_clique(gen.graph, inner));
  }
}

TEST(Generate, AverageDegreeNearTarget) {
  double total = 0;
  const int samples = 50;
  for (int s = 0; s < samples; ++s) {
    const GeneratedGraph gen = hrg(2000, 0.75, 10, 100 + s);
    total += 2.0 * gen.graph.edge_count() / gen.graph.vertex_count();
  }
  EXPECT_NEAR(total / samples, 10.0, 1.5);
}

TEST(Generate, Deterministic) {
  const GeneratedGraph a = hrg(5000, 0.75, 10, 9);
  const GeneratedGraph b = hrg(5000, 0.75, 10, 9);
  EXPECT_TRUE(a.graph.same_structure(b.graph));
  EXPECT_TRUE(std::equal(a.graph.coordinates().begin(), a.graph.coordinates().end(), b.graph.coordinates().begin()));
  EXPECT_EQ(a.params.C, b.params.C);
}

TEST(Generate, ExplicitOffset) {
  GenerateRequest request;
  request.n = 500;
  request.degree = DegreeControl{1.25};
  request.seed = SampleSeed{1};
  const GeneratedGraph gen = generate(request);
  EXPECT_EQ(gen.params.C, 1.25);
  EXPECT_EQ(gen.graph.vertex_count(), 500u);
  EXPECT_TRUE(gen.graph.has_coordinates());
}

TEST(Generate, PowerLawTail) {
  const GeneratedGraph gen = hrg(100000, 0.75, 10, 77);
  std::vector<std::size_t> degrees;
  for (Vertex v = 0; v < gen.graph.vertex_count(); ++v) degrees.push_back(gen.graph.degree(v));
  EXPECT_NEAR(testing::fit_powerlaw_exponent(degrees), 2.5, 0.3);
}

}  // namespace
}  // namespace hyperclique
