// Acceptance suite: one PASS/FAIL/SKIP line per criterion. Exit status is
// nonzero if any criterion fails; skipped criteria do not count as failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperclique/bench.hpp"
#include "hyperclique/error.hpp"
#include "hyperclique/generator.hpp"
#include "hyperclique/geometry.hpp"
#include "hyperclique/kernel.hpp"
#include "hyperclique/matching.hpp"
#include "hyperclique/snap.hpp"
#include "hyperclique/solver.hpp"
#include "hyperclique/timing.hpp"
#include "support/test_graphs.hpp"

namespace hyperclique {
namespace {

enum class Status { Pass, Fail, Skip };

struct Verdict {
  Status status = Status::Pass;
  std::string detail;
};

Verdict fail(std::string detail) { return {Status::Fail, std::move(detail)}; }
Verdict check(bool ok, std::string detail) { return {ok ? Status::Pass : Status::Fail, std::move(detail)}; }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double median_of(std::vector<double> v) { return median(std::move(v)); }

double median_of(const std::vector<std::size_t>& v) {
  return median(std::vector<double>(v.begin(), v.end()));
}

// 1. Every exact configuration agrees with the brute-force oracle.
Verdict oracle_equivalence() {
  const double alphas[] = {0.6, 0.75, 0.9};
  const double deltas[] = {4, 10};
  std::size_t instances = 0, mismatches = 0;
  for (std::size_t i = 0; i < 240; ++i) {
    const std::size_t n = 20 + (i * 7) % 61;
    const GeneratedGraph gen = testing::hrg(n, alphas[i % 3], deltas[(i / 3) % 2], 10000 + i);
    const std::size_t omega = oracle_max_clique(gen.graph).size();
    const Graph plain = testing::without_coordinates(gen.graph);
    const std::size_t got[] = {solve(gen.graph, Mode::Geo, Variant::Red).omega_eval,
                               solve(gen.graph, Mode::Geo, Variant::Skip).omega_eval,
                               solve(gen.graph, Mode::Geo, Variant::Opt).omega_eval,
                               solve(plain, Mode::NoGeo).omega_eval, solve(gen.graph, Mode::Baseline).omega_eval};
    ++instances;
    if (std::any_of(std::begin(got), std::end(got), [&](std::size_t w) { return w != omega; })) ++mismatches;
  }
  return check(mismatches == 0, fmt("%zu instances x 5 configurations, %zu mismatches", instances, mismatches));
}

// 2. The length-sorted ordering is a valid elimination ordering.
Verdict ordering_validity() {
  const double alphas[] = {0.6, 0.75, 0.9};
  std::size_t invalid = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    const std::size_t n = 100 + i * 38;
    const GeneratedGraph gen = testing::hrg(n, alphas[i % 3], i % 2 ? 10 : 4, 20000 + i);
    if (!validate_cneeo(gen.graph, build_cneeo_geometric(gen.graph))) ++invalid;
  }
  return check(invalid == 0, fmt("50 graphs, n in [100, 1962], %zu invalid", invalid));
}

std::vector<std::size_t> kernel_sizes(std::size_t n, double alpha, double delta, std::size_t samples,
                                      std::uint64_t seed_base) {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::KernelSize;
  spec.n_list = {n};
  spec.alpha_list = {alpha};
  spec.delta_list = {delta};
  spec.samples = samples;
  spec.seed_base = seed_base;
  std::vector<std::size_t> sizes;
  for (const KernelSizeRow& r : run_kernel_size(spec).rows) sizes.push_back(r.kernel_size);
  return sizes;
}

// 3. Median kernel size grows like n^(1 - alpha).
Verdict kernel_scaling() {
  std::vector<double> x, y;
  std::string medians;
  for (int e = 13; e <= 17; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const double m = median_of(kernel_sizes(n, 0.75, 10, 20, 30000 + 100 * e));
    x.push_back(std::log(static_cast<double>(n)));
    y.push_back(std::log(std::max(m, 1.0)));
    medians += fmt("%s2^%d:%g", medians.empty() ? "" : " ", e, m);
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = sxy / sxx;
  return check(slope >= 0.10 && slope <= 0.40, fmt("slope %.3f (medians %s)", slope, medians.c_str()));
}

// 4. Median kernel size increases with the average degree.
Verdict delta_monotonicity() {
  std::vector<double> m;
  for (double delta : {4.0, 10.0, 20.0}) {
    m.push_back(median_of(kernel_sizes(std::size_t{1} << 16, 0.75, delta, 20, 40000 + static_cast<int>(delta))));
  }
  return check(m[0] < m[1] && m[1] < m[2], fmt("medians %g < %g < %g", m[0], m[1], m[2]));
}

// 5. The kernel does not depend on the deletion order.
Verdict kernel_uniqueness() {
  std::size_t differing = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 50 + (i * 37) % 451;
    const Graph g = i % 2 ? testing::hrg(n, 0.6 + 0.03 * static_cast<double>(i % 10), 10, 50000 + i).graph
                          : testing::erdos_renyi(n, 8.0 / static_cast<double>(n), 50000 + i);
    const std::size_t k = std::max<std::size_t>(initial_clique(g).size(), 2 + i % 3);
    const VertexSet reference = peel(g, k);
    for (std::uint64_t s = 0; s < 20; ++s) {
      if (!(peel(g, k, 1000 * i + s) == reference)) {
        ++differing;
        break;
      }
    }
  }
  return check(differing == 0, fmt("100 graphs x 20 random orders, %zu graphs with differing kernels", differing));
}

// 6. Vertices within radius R/2 of the origin form a clique.
Verdict half_disk_clique() {
  std::size_t violations = 0, inner_total = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 100 + i * 98;
    const GeneratedGraph gen = testing::hrg(n, i % 2 ? 0.6 : 0.9, i % 3 ? 10 : 4, 60000 + i);
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < gen.graph.vertex_count(); ++v) {
      if (gen.graph.coordinate(v).r <= gen.params.R / 2) inner.push_back(v);
    }
    inner_total += inner.size();
    if (!is_clique(gen.graph, inner)) ++violations;
  }
  return check(violations == 0, fmt("50 graphs, %zu inner vertices in total, %zu graphs violating", inner_total,
                                    violations));
}

// 7. Degree tail exponent close to 2 alpha + 1.
Verdict powerlaw_exponent() {
  bool ok = true;
  std::string detail;
  for (double alpha : {0.6, 0.75}) {
    const GeneratedGraph gen = testing::hrg(100000, alpha, 10, 70000 + static_cast<std::uint64_t>(alpha * 100));
    std::vector<std::size_t> degrees;
    for (Vertex v = 0; v < gen.graph.vertex_count(); ++v) degrees.push_back(gen.graph.degree(v));
    const double beta = testing::fit_powerlaw_exponent(degrees);
    const double target = 2 * alpha + 1;
    ok = ok && std::fabs(beta - target) <= 0.3;
    detail += fmt("%salpha %.2f: fitted %.3f, expected %.2f", detail.empty() ? "" : "; ", alpha, beta, target);
  }
  return check(ok, detail);
}

// 8. Pruning makes the geometric solver faster: opt < skip < red, red >= 2 opt.
Verdict variant_ordering() {
  std::vector<double> red, skip, opt;
  const Variant order[3][3] = {{Variant::Red, Variant::Skip, Variant::Opt},
                               {Variant::Skip, Variant::Opt, Variant::Red},
                               {Variant::Opt, Variant::Red, Variant::Skip}};
  for (std::uint64_t i = 0; i < 10; ++i) {
    const GeneratedGraph gen = testing::hrg(100000, 0.75, 10, 80000 + i);
    (void)solve(gen.graph, Mode::Geo, Variant::Opt);  // warm caches and allocator
    // Five interleaved rounds with rotated order; each variant keeps its
    // fastest run, which filters scheduler and cache noise in shared phases.
    double best[3] = {INFINITY, INFINITY, INFINITY};
    for (int round = 0; round < 5; ++round) {
      for (Variant v : order[(i + round) % 3]) {
        const double t = solve(gen.graph, Mode::Geo, v).timings.total;
        double& b = best[v == Variant::Red ? 0 : v == Variant::Skip ? 1 : 2];
        b = std::min(b, t);
      }
    }
    red.push_back(best[0]);
    skip.push_back(best[1]);
    opt.push_back(best[2]);
  }
  const double r = median_of(red), s = median_of(skip), o = median_of(opt);
  return check(o < s && s < r && r >= 2 * o,
               fmt("median total ms: opt %.2f, skip %.2f, red %.2f, red/opt %.2f", o, s, r, r / o));
}

// 9. The heuristic never overstates and is right whenever it claims exactness.
Verdict heuristic_soundness() {
  std::size_t violations = 0, exact = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 20 + (i * 13) % 41;
    const Graph g = testing::erdos_renyi(n, i % 2 ? 0.5 : 0.2, 90000 + i);
    const CliqueOutcome out = solve_heuristic(g);
    const std::size_t omega = oracle_max_clique(g).size();
    const bool ok = initial_clique(g).size() <= out.omega_eval && out.omega_eval <= omega &&
                    is_clique(g, out.clique) && (!out.exact || out.omega_eval == omega);
    if (!ok) ++violations;
    if (out.exact) ++exact;
  }
  return check(violations == 0, fmt("100 graphs (%zu reported exact), %zu violations", exact, violations));
}

// 10. Real-world datasets (needs network on a cold cache).
Verdict realworld() {
  const char* env = std::getenv("HYPERCLIQUE_CACHE");
  const std::string cache = env && *env ? env : "snap-cache";
  struct Expect {
    const char* name;
    double reference_seconds;
  };
  const Expect sets[] = {{"ca-HepPh", 0.00}, {"com-dblp", 0.21}, {"Wiki-Vote", 6.34}};
  std::vector<std::string> warnings;
  std::vector<RealWorldRow> rows;
  for (const Expect& e : sets) {
    auto got = run_realworld({e.name}, cache, {}, [&](const std::string& w) { warnings.push_back(w); });
    if (got.empty()) return {Status::Skip, "dataset unavailable (" + warnings.back() + ")"};
    rows.push_back(got.front());
  }
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const RealWorldRow& r = rows[i];
    const double bound_ms = 10 * (sets[i].reference_seconds + 0.005) * 1000;
    bool row_ok = r.runtime_ms <= bound_ms;
    if (r.dataset == "ca-HepPh") row_ok = row_ok && r.exact && r.omega_eval == 239 && r.v_left == 0 && r.e_left == 0;
    if (r.dataset == "com-dblp") row_ok = row_ok && r.exact && r.omega_eval == 114;
    if (r.dataset == "Wiki-Vote") {
      row_ok = row_ok && r.omega_eval >= 13 && r.omega_eval <= 17 && (r.omega_eval == 17 || (r.v_left > 0 && r.e_left > 0));
    }
    ok = ok && row_ok;
    detail += fmt("%s%s: omega %zu%s, left %zu/%zu, %.1f ms (bound %.0f)", i ? "; " : "", r.dataset.c_str(),
                  r.omega_eval, r.exact ? " exact" : " lower bound", r.v_left, r.e_left, r.runtime_ms, bound_ms);
  }
  return check(ok, detail);
}

// 11. Matching and co-bipartite clique routines against references.
Verdict matching_correctness() {
  std::mt19937_64 rng(110000);
  std::size_t hk_bad = 0, clique_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t left = 1 + rng() % 20, right = 1 + rng() % 20;
    const double p = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
    std::vector<std::vector<std::uint32_t>> adj(left);
    std::bernoulli_distribution coin(p);
    for (std::size_t l = 0; l < left; ++l) {
      for (std::uint32_t r = 0; r < right; ++r) {
        if (coin(rng)) adj[l].push_back(r);
      }
    }
    const MatchingResult m = hopcroft_karp(left, right, std::span<const std::vector<std::uint32_t>>(adj));
    if (m.size != testing::augmenting_path_matching(left, right, adj)) ++hk_bad;
  }
  for (std::uint64_t t = 0; t < 500; ++t) {
    const std::size_t a = rng() % 16, b = rng() % (31 - a);
    const Graph g = testing::relabel(testing::random_cobipartite(a, b, 0.1 + 0.8 * (t % 9) / 8.0, 111000 + t), t);
    const std::vector<Vertex> c = max_clique_cobipartite(g);
    if (!is_clique(g, c) || c.size() != oracle_max_clique(g).size()) ++clique_bad;
  }
  return check(hk_bad == 0 && clique_bad == 0,
               fmt("matching: 1000 instances, %zu mismatches; co-bipartite clique: 500 graphs, %zu mismatches",
                   hk_bad, clique_bad));
}

// 12. Ball measures: Monte Carlo for the origin ball, quadrature vs asymptotic.
Verdict measure_validation() {
  bool ok = true;
  std::string detail;
  {
    const HrgParams p = HrgParams::make(1000000, 0.75, solve_C_for_avg_degree(1000000, 0.75, 10));
    const std::vector<PolarPoint> pts = sample_points(p, SampleSeed{120000});
    const double n = static_cast<double>(pts.size());
    for (double f : {0.25, 0.5, 0.75}) {
      const double r = f * p.R;
      const double expected = mu_origin_ball(r, p);
      const double observed =
          static_cast<double>(std::count_if(pts.begin(), pts.end(), [&](const PolarPoint& q) { return q.r <= r; })) / n;
      const double se = std::sqrt(std::max(expected * (1 - expected), 1.0 / n) / n);
      const double z = std::fabs(observed - expected) / se;
      ok = ok && z <= 3;
      detail += fmt("%sr=%.2gR: %.3g SE", detail.empty() ? "" : ", ", f, z);
    }
  }
  {
    const HrgParams p = HrgParams::make(100000, 0.75, solve_C_for_avg_degree(100000, 0.75, 10));
    double worst = 0;
    for (int i = 0; i <= 10; ++i) {
      const double r = p.R * (0.5 + 0.05 * i);
      const double q = mu_ball_intersection(r, p);
      worst = std::max(worst, std::fabs(q - mu_ball_intersection_asymptotic(r, p)) / q);
    }
    ok = ok && worst <= 0.05;
    detail += fmt("; intersection worst relative gap %.2f%%", 100 * worst);
  }
  return check(ok, detail);
}

}  // namespace
}  // namespace hyperclique

// Optional arguments select criteria by number, e.g. `acceptance_test 3 8`.
int main(int argc, char** argv) {
  using namespace hyperclique;
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence", oracle_equivalence},     {2, "ordering validity", ordering_validity},
      {3, "kernel scaling", kernel_scaling},             {4, "delta monotonicity", delta_monotonicity},
      {5, "kernel uniqueness", kernel_uniqueness},       {6, "half-disk clique", half_disk_clique},
      {7, "power-law exponent", powerlaw_exponent},      {8, "variant ordering", variant_ordering},
      {9, "heuristic soundness", heuristic_soundness},   {10, "real-world datasets", realworld},
      {11, "matching correctness", matching_correctness}, {12, "measure validation", measure_validation},
  };
  int failures = 0;
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  for (const Criterion& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Verdict v;
    Stopwatch watch;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const char* tag = v.status == Status::Pass ? "PASS" : v.status == Status::Fail ? "FAIL" : "SKIP";
    if (v.status == Status::Fail) ++failures;
    std::printf("criterion %2d %s  %-22s %s [%.1f s]\n", c.id, tag, c.name, v.detail.c_str(),
                watch.elapsed_ms() / 1000);
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
