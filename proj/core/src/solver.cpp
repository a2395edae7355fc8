#include "hyperclique/solver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "hyperclique/error.hpp"
#include "hyperclique/geometry.hpp"
#include "hyperclique/kernel.hpp"
#include "hyperclique/matching.hpp"
#include "live_graph.hpp"

namespace hyperclique {
namespace {

using detail::EdgeId;
using detail::LiveGraph;
using detail::SubproblemBuilder;

std::vector<Vertex> to_vertices(std::span<const Vertex> local_ids, std::span<const std::size_t> clique) {
  std::vector<Vertex> out;
  out.reserve(clique.size());
  for (std::size_t i : clique) out.push_back(local_ids[i]);
  return out;
}

std::vector<Vertex> to_parent(const Subgraph& sub, std::span<const Vertex> clique) {
  std::vector<Vertex> out;
  out.reserve(clique.size());
  for (Vertex v : clique) out.push_back(sub.to_parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

struct ScanResult {
  /// Best clique found strictly larger than the lower bound; empty otherwise.
  std::vector<Vertex> best;
  std::size_t residual_vertices = 0;
  std::size_t residual_edges = 0;
};

/// Walks a fixed ordering. Pruning deletes vertices whose degree drops below
/// the current lower bound and skips subproblems too small to improve it.
ScanResult scan_ordering(const Graph& g, const EdgeOrdering& ordering, Variant variant, std::size_t k,
                         PhaseTimings& timings) {
  LiveGraph live(g);
  SubproblemBuilder builder(g);
  std::vector<std::uint8_t> seen(g.edge_count(), 0);
  std::vector<Vertex> common;
  ScanResult result;
  const bool pruning = variant != Variant::Red;

  auto doomed = [&](Vertex x) {
    if (!pruning) return false;
    if (!live.vertex_alive(x)) return true;
    const std::size_t deg = variant == Variant::Opt ? live.live_degree(x) : live.alive_degree(x);
    if (deg < k) {
      live.remove_vertex(x);
      return true;
    }
    return false;
  };

  for (const Edge& edge : ordering.edges) {
    const auto id = live.find_edge(edge.u, edge.v);
    if (!id) throw ContractViolation("ordering contains a non-edge");
    if (seen[*id]) throw ContractViolation("ordering repeats an edge");
    seen[*id] = 1;
    if (!live.edge_alive(*id)) continue;
    if (doomed(edge.u) || doomed(edge.v)) continue;

    {
      ScopedTimer timer(timings.construct);
      live.live_common_neighbors(edge.u, edge.v, common);
      if (pruning) {
        std::erase_if(common, doomed);
      }
    }
    if (pruning) {
      if (doomed(edge.u) || doomed(edge.v)) continue;
      if (common.size() + 2 <= k) {
        live.remove_edge(*id);
        continue;
      }
    }
    {
      ScopedTimer timer(timings.construct);
      builder.build(edge.u, edge.v, common);
    }
    {
      ScopedTimer timer(timings.indep);
      const CobipartiteCheck check = complement_bipartition(builder.dense());
      if (!check.cobipartite()) {
        throw ContractViolation("subproblem of edge (" + std::to_string(edge.u) + ", " + std::to_string(edge.v) +
                                ") is not co-bipartite");
      }
      const auto clique = max_clique_cobipartite(builder.dense(), &*check.bipartition);
      if (clique.size() > k && clique.size() > result.best.size()) {
        result.best = to_vertices(builder.vertices(), clique);
        k = clique.size();
      }
    }
    live.remove_edge(*id);
  }

  result.residual_edges = live.live_edges();
  result.residual_vertices = live.residual_vertices();
  if (ordering.complete && result.residual_edges > 0) {
    throw ContractViolation("complete ordering does not cover the edge set");
  }
  return result;
}

struct GreedyConfig {
  bool prune = false;
  bool solve = false;
  std::size_t k = 0;
};

struct GreedyResult {
  std::vector<Edge> placed;
  std::vector<Vertex> best;
  std::size_t residual_vertices = 0;
  std::size_t residual_edges = 0;
  double test_ms = 0;
  double solve_ms = 0;
};

/// Greedy ordering construction. An edge is placed when its current
/// subproblem is co-bipartite; a failing edge becomes inactive until an edge
/// at one of its endpoints disappears.
GreedyResult run_greedy(const Graph& g, GreedyConfig config) {
  LiveGraph live(g);
  SubproblemBuilder builder(g);
  const std::size_t m = g.edge_count();
  std::deque<EdgeId> queue;
  std::vector<std::uint8_t> queued(m, 1);
  for (EdgeId e = 0; e < m; ++e) queue.push_back(e);
  std::vector<Vertex> common;
  GreedyResult result;
  std::size_t k = config.k;

  auto activate_at = [&](Vertex x) {
    live.for_each_live_edge(x, [&](EdgeId f, Vertex) {
      if (!queued[f]) {
        queued[f] = 1;
        queue.push_back(f);
      }
    });
  };
  auto doomed = [&](Vertex x) {
    if (!config.prune) return false;
    if (!live.vertex_alive(x)) return true;
    if (live.live_degree(x) < k) {
      live.remove_vertex(x, [&](EdgeId, Vertex w) { activate_at(w); });
      return true;
    }
    return false;
  };

  Stopwatch watch;
  while (!queue.empty()) {
    const EdgeId e = queue.front();
    queue.pop_front();
    queued[e] = 0;
    if (!live.edge_alive(e)) continue;
    const Edge edge = live.endpoints(e);
    if (doomed(edge.u) || doomed(edge.v)) continue;

    watch.restart();
    live.live_common_neighbors(edge.u, edge.v, common);
    if (config.prune) {
      std::erase_if(common, doomed);
      if (doomed(edge.u) || doomed(edge.v)) {
        result.test_ms += watch.elapsed_ms();
        continue;
      }
    }
    builder.build(edge.u, edge.v, common);
    std::optional<CobipartiteCheck> check;
    if (!quick_reject_cobipartite(builder.dense())) check = complement_bipartition(builder.dense());
    result.test_ms += watch.elapsed_ms();
    if (!check || !check->cobipartite()) continue;

    result.placed.push_back(edge);
    if (config.solve && builder.vertices().size() > k) {
      watch.restart();
      const auto clique = max_clique_cobipartite(builder.dense(), &*check->bipartition);
      if (clique.size() > k) {
        result.best = to_vertices(builder.vertices(), clique);
        k = clique.size();
      }
      result.solve_ms += watch.elapsed_ms();
    }
    live.remove_edge(e);
    activate_at(edge.u);
    activate_at(edge.v);
  }

  result.residual_edges = live.live_edges();
  result.residual_vertices = live.residual_vertices();
  return result;
}

void require_clique(const Graph& g, std::span<const Vertex> seed) {
  for (Vertex v : seed) {
    if (v >= g.vertex_count()) throw std::invalid_argument("seed clique vertex out of range");
  }
  if (!is_clique(g, seed)) throw std::invalid_argument("seed is not a clique");
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Geo:
      return "geo";
    case Mode::NoGeo:
      return "nogeo";
    case Mode::Baseline:
      return "baseline";
  }
  return "?";
}

std::string_view to_string(Variant variant) {
  switch (variant) {
    case Variant::Red:
      return "red";
    case Variant::Skip:
      return "skip";
    case Variant::Opt:
      return "opt";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "geo") return Mode::Geo;
  if (name == "nogeo") return Mode::NoGeo;
  if (name == "baseline") return Mode::Baseline;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (expected geo, nogeo or baseline)");
}

Variant parse_variant(std::string_view name) {
  if (name == "red") return Variant::Red;
  if (name == "skip") return Variant::Skip;
  if (name == "opt") return Variant::Opt;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected red, skip or opt)");
}

EdgeOrdering build_cneeo_geometric(const Graph& g) {
  if (!g.has_coordinates() && g.vertex_count() > 0) {
    throw std::invalid_argument("geometric ordering needs vertex coordinates");
  }
  struct Keyed {
    double length;
    Edge edge;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(g.edge_count());
  for (const Edge& e : g.edges()) keyed.push_back({distance(g.coordinate(e.u), g.coordinate(e.v)), e});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.length != b.length) return a.length > b.length;
    return a.edge < b.edge;
  });
  EdgeOrdering ordering;
  ordering.kind = EdgeOrdering::Kind::LengthSorted;
  ordering.complete = true;
  ordering.edges.reserve(keyed.size());
  for (const Keyed& k : keyed) ordering.edges.push_back(k.edge);
  return ordering;
}

EdgeOrdering build_cneeo_greedy(const Graph& g) {
  GreedyResult run = run_greedy(g, GreedyConfig{});
  EdgeOrdering ordering;
  ordering.kind = EdgeOrdering::Kind::Greedy;
  ordering.edges = std::move(run.placed);
  ordering.complete = run.residual_edges == 0;
  return ordering;
}

bool validate_cneeo(const Graph& g, const EdgeOrdering& ordering) {
  if (ordering.edges.size() != g.edge_count()) return false;
  LiveGraph live(g);
  SubproblemBuilder builder(g);
  std::vector<Vertex> common;
  for (const Edge& edge : ordering.edges) {
    const auto id = live.find_edge(edge.u, edge.v);
    if (!id || !live.edge_alive(*id)) return false;
    live.live_common_neighbors(edge.u, edge.v, common);
    builder.build(edge.u, edge.v, common);
    if (quick_reject_cobipartite(builder.dense())) return false;
    if (!complement_bipartition(builder.dense()).cobipartite()) return false;
    live.remove_edge(*id);
  }
  return true;
}

CliqueOutcome solve_with_cneeo(const Graph& g, const EdgeOrdering& ordering, Variant variant,
                               std::span<const Vertex> seed_clique) {
  require_clique(g, seed_clique);
  Stopwatch total;
  CliqueOutcome out;
  out.mode = ordering.kind == EdgeOrdering::Kind::LengthSorted ? Mode::Geo : Mode::NoGeo;
  out.variant = variant;
  out.kernel_size = g.vertex_count();
  out.kernel_edges = g.edge_count();
  out.omega_kernel = seed_clique.size();

  ScanResult scan = scan_ordering(g, ordering, variant, seed_clique.size(), out.timings);
  if (!scan.best.empty()) {
    out.clique = std::move(scan.best);
  } else {
    out.clique.assign(seed_clique.begin(), seed_clique.end());
  }
  std::sort(out.clique.begin(), out.clique.end());
  out.omega_eval = out.clique.size();
  out.exact = ordering.complete;
  out.residual_edges = scan.residual_edges;
  out.residual_vertices = scan.residual_vertices;
  out.timings.total = total.elapsed_ms();
  out.timings.finalize_other();
  return out;
}

CliqueOutcome solve_heuristic(const Graph& g) {
  Stopwatch total;
  CliqueOutcome out;
  out.mode = Mode::NoGeo;
  out.variant = Variant::Opt;

  KernelResult kr = kernelize(g);
  out.timings.init = kr.init_ms;
  out.timings.kernel = kr.kernel_ms;
  Subgraph sub;
  {
    ScopedTimer timer(out.timings.kernel);
    sub = induced_subgraph(g, kr.kernel);
  }
  out.kernel_size = sub.graph.vertex_count();
  out.kernel_edges = sub.graph.edge_count();
  out.omega_kernel = kr.initial_clique.size();

  GreedyResult run = run_greedy(sub.graph, GreedyConfig{true, true, kr.initial_clique.size()});
  out.timings.cneeo = run.test_ms;
  out.timings.indep = run.solve_ms;

  if (!run.best.empty()) {
    out.clique = to_parent(sub, run.best);
  } else {
    out.clique = kr.initial_clique;
    std::sort(out.clique.begin(), out.clique.end());
  }
  out.omega_eval = out.clique.size();
  out.exact = run.residual_edges == 0;
  out.residual_edges = run.residual_edges;
  out.residual_vertices = run.residual_vertices;
  out.timings.total = total.elapsed_ms();
  out.timings.finalize_other();
  return out;
}

CliqueOutcome solve_baseline(const Graph& g) {
  Stopwatch total;
  CliqueOutcome out;
  out.mode = Mode::Baseline;
  out.variant = Variant::Red;

  KernelResult kr = kernelize(g);
  out.timings.init = kr.init_ms;
  out.timings.kernel = kr.kernel_ms;
  Subgraph sub;
  {
    ScopedTimer timer(out.timings.kernel);
    sub = induced_subgraph(g, kr.kernel);
  }
  const Graph& kg = sub.graph;
  out.kernel_size = kg.vertex_count();
  out.kernel_edges = kg.edge_count();
  out.omega_kernel = kr.initial_clique.size();

  const bool lens = kg.has_coordinates();
  SubproblemBuilder builder(kg);
  std::vector<Vertex> best;
  std::size_t k = kr.initial_clique.size();
  std::vector<std::uint8_t> failed_vertex(kg.vertex_count(), 0);
  std::size_t failed_edges = 0;

  for (const Edge& e : kg.edges()) {
    {
      ScopedTimer timer(out.timings.construct);
      std::vector<Vertex> common = common_neighbors(kg, e.u, e.v);
      if (lens) {
        const double d_uv = distance(kg.coordinate(e.u), kg.coordinate(e.v));
        std::erase_if(common, [&](Vertex w) {
          return distance(kg.coordinate(e.u), kg.coordinate(w)) > d_uv ||
                 distance(kg.coordinate(e.v), kg.coordinate(w)) > d_uv;
        });
      }
      builder.build(e.u, e.v, common);
    }
    ScopedTimer timer(out.timings.indep);
    const CobipartiteCheck check = complement_bipartition(builder.dense());
    if (!check.cobipartite()) {
      ++failed_edges;
      failed_vertex[e.u] = failed_vertex[e.v] = 1;
      continue;
    }
    const auto clique = max_clique_cobipartite(builder.dense(), &*check.bipartition);
    if (clique.size() > k) {
      best = to_vertices(builder.vertices(), clique);
      k = clique.size();
    }
  }

  if (!best.empty()) {
    out.clique = to_parent(sub, best);
  } else {
    out.clique = kr.initial_clique;
    std::sort(out.clique.begin(), out.clique.end());
  }
  out.omega_eval = out.clique.size();
  out.exact = failed_edges == 0;
  out.residual_edges = failed_edges;
  out.residual_vertices = static_cast<std::size_t>(std::count(failed_vertex.begin(), failed_vertex.end(), 1));
  out.timings.total = total.elapsed_ms();
  out.timings.finalize_other();
  return out;
}

CliqueOutcome solve(const Graph& g, Mode mode, Variant variant) {
  switch (mode) {
    case Mode::NoGeo:
      return solve_heuristic(g);
    case Mode::Baseline:
      return solve_baseline(g);
    case Mode::Geo:
      break;
  }
  if (!g.has_coordinates() && g.vertex_count() > 0) {
    throw std::invalid_argument("geo mode needs vertex coordinates");
  }
  Stopwatch total;
  CliqueOutcome out;
  out.mode = Mode::Geo;
  out.variant = variant;

  KernelResult kr = kernelize(g);
  out.timings.init = kr.init_ms;
  out.timings.kernel = kr.kernel_ms;
  Subgraph sub;
  {
    ScopedTimer timer(out.timings.kernel);
    sub = induced_subgraph(g, kr.kernel);
  }
  out.kernel_size = sub.graph.vertex_count();
  out.kernel_edges = sub.graph.edge_count();
  out.omega_kernel = kr.initial_clique.size();

  EdgeOrdering ordering;
  {
    ScopedTimer timer(out.timings.cneeo);
    ordering = build_cneeo_geometric(sub.graph);
  }
  ScanResult scan = scan_ordering(sub.graph, ordering, variant, kr.initial_clique.size(), out.timings);
  if (!scan.best.empty()) {
    out.clique = to_parent(sub, scan.best);
  } else {
    out.clique = kr.initial_clique;
    std::sort(out.clique.begin(), out.clique.end());
  }
  out.omega_eval = out.clique.size();
  out.exact = true;
  out.timings.total = total.elapsed_ms();
  out.timings.finalize_other();
  return out;
}

}  // namespace hyperclique
