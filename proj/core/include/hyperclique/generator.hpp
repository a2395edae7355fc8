#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "hyperclique/geometry.hpp"
#include "hyperclique/graph.hpp"

namespace hyperclique {

/// Seed of the deterministic point sampler. Identical (seed, params) give
/// bit-identical points on every platform.
struct SampleSeed {
  std::uint64_t value = 0;
};

/// n i.i.d. points: radius by inverse CDF of the radial density, angle uniform.
std::vector<PolarPoint> sample_points(const HrgParams& params, SampleSeed seed);

/// Connects every pair at hyperbolic distance <= params.R. Uses the all-pairs
/// builder up to kNaiveBuildLimit points and the banded builder above it.
/// The returned graph carries `points` as its coordinates.
Graph build_graph(std::vector<PolarPoint> points, const HrgParams& params);

inline constexpr std::size_t kNaiveBuildLimit = 4096;

/// O(n^2) reference builder.
Graph build_graph_naive(std::vector<PolarPoint> points, const HrgParams& params);

/// Radial bands, each sorted by angle; a point only inspects the angular
/// window in which a band can still contain neighbors.
Graph build_graph_bucketed(std::vector<PolarPoint> points, const HrgParams& params);

struct DegreeControl {
  double C = 0;
};
struct AverageDegree {
  double delta = 0;
};

struct GenerateRequest {
  std::size_t n = 0;
  double alpha = 0.75;
  std::variant<DegreeControl, AverageDegree> degree = AverageDegree{10.0};
  SampleSeed seed;
};

struct GeneratedGraph {
  HrgParams params;
  Graph graph;
};

/// Solves for C when an average degree is requested, samples, builds.
GeneratedGraph generate(const GenerateRequest& request);

}  // namespace hyperclique
