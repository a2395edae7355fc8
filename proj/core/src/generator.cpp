#include "hyperclique/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hyperclique {
namespace {

// 53-bit uniform double in [0, 1), independent of the standard library's
// distribution implementations.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool within(const PolarPoint& a, const PolarPoint& b, double R) { return distance(a, b) <= R; }

Graph finish(std::size_t n, std::vector<Edge>& edges, std::vector<PolarPoint> points) {
  Graph g = Graph::from_edges(n, edges);
  g.set_coordinates(std::move(points));
  return g;
}

}  // namespace

std::vector<PolarPoint> sample_points(const HrgParams& params, SampleSeed seed) {
  std::mt19937_64 rng(seed.value);
  const double a = params.alpha;
  const double R = params.R;
  const double scale = std::cosh(a * R) - 1.0;
  std::vector<PolarPoint> points;
  points.reserve(params.n);
  for (std::size_t i = 0; i < params.n; ++i) {
    const double u = unit_uniform(rng);
    double r = 0.0;
    if (std::isfinite(scale)) {
      r = std::acosh(1.0 + u * scale) / a;
    } else {
      // cosh(aR) overflowed: invert the tail e^{ar}/2 ~ u e^{aR}/2 instead.
      r = u > 0.0 ? R + std::log(u) / a : 0.0;
    }
    r = std::clamp(r, 0.0, R);
    const double phi = kTwoPi * unit_uniform(rng);
    points.emplace_back(r, phi);
  }
  return points;
}

Graph build_graph_naive(std::vector<PolarPoint> points, const HrgParams& params) {
  const std::size_t n = points.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (within(points[i], points[j], params.R)) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  return finish(n, edges, std::move(points));
}

Graph build_graph_bucketed(std::vector<PolarPoint> points, const HrgParams& params) {
  const std::size_t n = points.size();
  const double R = params.R;

  // Band 0 is [0, R/2); the outer half is cut into bands of unit width.
  std::vector<double> lower = {0.0};
  const double half = R / 2.0;
  const auto outer_bands = static_cast<std::size_t>(std::max(1.0, std::ceil(R - half)));
  for (std::size_t b = 0; b < outer_bands; ++b) {
    lower.push_back(half + (R - half) * static_cast<double>(b) / static_cast<double>(outer_bands));
  }
  const std::size_t band_count = lower.size();
  auto band_of = [&](double r) {
    const auto it = std::upper_bound(lower.begin(), lower.end(), r);
    return static_cast<std::size_t>(it - lower.begin()) - 1;
  };

  struct Entry {
    double phi;
    Vertex id;
  };
  std::vector<std::vector<Entry>> bands(band_count);
  std::vector<std::size_t> band(n);
  for (std::size_t i = 0; i < n; ++i) {
    band[i] = band_of(points[i].r);
    bands[band[i]].push_back({points[i].phi, static_cast<Vertex>(i)});
  }
  for (auto& entries : bands) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& x, const Entry& y) { return x.phi < y.phi || (x.phi == y.phi && x.id < y.id); });
  }

  std::vector<Edge> edges;
  auto consider = [&](Vertex i, Vertex j, std::size_t bi, std::size_t bj) {
    if (bi == bj && j <= i) return;
    if (within(points[i], points[j], R)) edges.push_back({std::min(i, j), std::max(i, j)});
  };

  for (std::size_t i = 0; i < n; ++i) {
    const PolarPoint& p = points[i];
    for (std::size_t b = band[i]; b < band_count; ++b) {
      const auto& entries = bands[b];
      if (entries.empty()) continue;
      // The deviation bound shrinks as the partner radius grows, so the band's
      // lower edge gives a window valid for every member. Pad it against
      // rounding; candidates are re-checked exactly.
      const double theta = max_angular_deviation(p.r, lower[b], R) * (1.0 + 1e-9) + 1e-9;
      auto scan = [&](double from, double to) {
        auto it = std::lower_bound(entries.begin(), entries.end(), from,
                                   [](const Entry& e, double value) { return e.phi < value; });
        for (; it != entries.end() && it->phi <= to; ++it) {
          consider(static_cast<Vertex>(i), it->id, band[i], b);
        }
      };
      if (theta >= std::numbers::pi) {
        scan(0.0, kTwoPi);
        continue;
      }
      const double from = p.phi - theta;
      const double to = p.phi + theta;
      if (from < 0.0) {
        scan(from + kTwoPi, kTwoPi);
        scan(0.0, to);
      } else if (to >= kTwoPi) {
        scan(from, kTwoPi);
        scan(0.0, to - kTwoPi);
      } else {
        scan(from, to);
      }
    }
  }
  return finish(n, edges, std::move(points));
}

Graph build_graph(std::vector<PolarPoint> points, const HrgParams& params) {
  if (points.size() <= kNaiveBuildLimit) return build_graph_naive(std::move(points), params);
  return build_graph_bucketed(std::move(points), params);
}

GeneratedGraph generate(const GenerateRequest& request) {
  double C = 0.0;
  if (const auto* control = std::get_if<DegreeControl>(&request.degree)) {
    C = control->C;
  } else {
    C = solve_C_for_avg_degree(request.n, request.alpha, std::get<AverageDegree>(request.degree).delta);
  }
  const HrgParams params = HrgParams::make(request.n, request.alpha, C);
  Graph graph = build_graph(sample_points(params, request.seed), params);
  return {params, std::move(graph)};
}

}  // namespace hyperclique
