#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hyperclique/graph.hpp"
#include "hyperclique/timing.hpp"

namespace hyperclique {

/// Edge elimination ordering: at every position i, the common neighbors of
/// the endpoints of edge i, counted only through edges at positions >= i,
/// should induce a co-bipartite subgraph.
struct EdgeOrdering {
  enum class Kind { LengthSorted, Greedy };

  std::vector<Edge> edges;
  Kind kind = Kind::Greedy;
  /// False when greedy construction stalled before placing every edge;
  /// `edges` is then the placed prefix.
  bool complete = true;
};

enum class Mode { Geo, NoGeo, Baseline };
/// Red: no pruning. Skip: lazily drop vertices whose degree (over surviving
/// vertices) is below the best clique, and skip subproblems that cannot beat
/// it. Opt: as Skip, but degrees also shrink as ordering edges are consumed.
enum class Variant { Red, Skip, Opt };

std::string_view to_string(Mode mode);
std::string_view to_string(Variant variant);
/// Throws std::invalid_argument on unknown names.
Mode parse_mode(std::string_view name);
Variant parse_variant(std::string_view name);

struct CliqueOutcome {
  Mode mode = Mode::Geo;
  Variant variant = Variant::Opt;
  /// Vertex ids of the input graph, ascending.
  std::vector<Vertex> clique;
  std::size_t omega_eval = 0;
  /// Size of the greedy initial clique.
  std::size_t omega_kernel = 0;
  bool exact = true;
  std::size_t kernel_size = 0;
  std::size_t kernel_edges = 0;
  /// Remaining graph after an aborted ordering; zero when exact.
  std::size_t residual_vertices = 0;
  std::size_t residual_edges = 0;
  PhaseTimings timings;
};

inline constexpr std::size_t kOracleVertexLimit = 120;

/// Exact maximum clique by branch and bound over Bron-Kerbosch with pivoting.
/// Among maximum cliques the lexicographically smallest sorted vertex set is
/// returned. Throws std::length_error above kOracleVertexLimit vertices.
std::vector<Vertex> oracle_max_clique(const Graph& g);

/// Kernelize, then for every kernel edge uv solve the co-bipartite
/// subproblem on u, v and the vertices that can share a maximum clique with
/// them as its longest edge: with coordinates, common neighbors w with
/// d(u,w) <= d(u,v) and d(v,w) <= d(u,v); without, all common neighbors (and
/// subproblems that are not co-bipartite make the result inexact).
CliqueOutcome solve_baseline(const Graph& g);

/// Edges sorted by non-increasing hyperbolic length, ties by (u, v).
/// Throws std::invalid_argument without coordinates.
EdgeOrdering build_cneeo_geometric(const Graph& g);

/// Greedy construction with an active/inactive edge queue; an edge that fails
/// is revisited only after an edge sharing one of its endpoints is removed.
EdgeOrdering build_cneeo_greedy(const Graph& g);

/// Replays `ordering` and checks the co-bipartite condition at each step.
/// False also when the ordering is not a permutation of the edge set.
bool validate_cneeo(const Graph& g, const EdgeOrdering& ordering);

/// Scans `ordering`, solving each edge's subproblem, starting from the lower
/// bound `seed_clique`. With a complete ordering the result is exact and a
/// subproblem that is not co-bipartite raises ContractViolation. With an
/// incomplete ordering only the prefix is used, the result is a lower bound,
/// and the unplaced remainder is reported as residual.
CliqueOutcome solve_with_cneeo(const Graph& g, const EdgeOrdering& ordering, Variant variant,
                               std::span<const Vertex> seed_clique = {});

/// Geometry-free pipeline: kernelize, then greedy ordering interleaved with
/// subproblem solving and lazy deletion. Exact iff the ordering completes;
/// otherwise a certified lower bound plus the residual graph size.
CliqueOutcome solve_heuristic(const Graph& g);

/// Geo: kernelize, length-sorted ordering, solve_with_cneeo(variant).
/// NoGeo: solve_heuristic. Baseline: solve_baseline.
/// Throws std::invalid_argument for Geo on a graph without coordinates.
CliqueOutcome solve(const Graph& g, Mode mode, Variant variant = Variant::Opt);

}  // namespace hyperclique
