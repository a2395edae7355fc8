#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperclique/graph.hpp"
#include "hyperclique/matching.hpp"

namespace hyperclique::detail {

using EdgeId = std::uint32_t;

/// Edge-deletable, vertex-deletable view of an immutable graph.
///
/// Two degree counters are kept per vertex: `live_degree` counts remaining
/// edges (shrinks as edges are consumed or vertices deleted), while
/// `alive_degree` counts surviving neighbors in the underlying graph and only
/// shrinks on vertex deletion.
class LiveGraph {
 public:
  explicit LiveGraph(const Graph& g);

  const Graph& graph() const noexcept { return g_; }
  std::size_t edge_total() const noexcept { return endpoints_.size(); }
  Edge endpoints(EdgeId e) const { return endpoints_[e]; }
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  bool edge_alive(EdgeId e) const { return edge_alive_[e] != 0; }
  bool vertex_alive(Vertex v) const { return vertex_alive_[v] != 0; }
  std::size_t live_degree(Vertex v) const { return live_degree_[v]; }
  std::size_t alive_degree(Vertex v) const { return alive_degree_[v]; }
  std::size_t live_edges() const noexcept { return live_edges_; }
  /// Alive vertices that still have a live edge.
  std::size_t residual_vertices() const;

  void remove_edge(EdgeId e);

  /// Deletes v and its live edges; `on_edge_removed(e, other_endpoint)` runs
  /// for each of them after removal.
  template <class Fn>
  void remove_vertex(Vertex v, Fn&& on_edge_removed) {
    if (!vertex_alive_[v]) return;
    vertex_alive_[v] = 0;
    const std::size_t base = g_.offset(v);
    const auto nbrs = g_.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex w = nbrs[i];
      --alive_degree_[w];
      const EdgeId e = slot_edge_[base + i];
      if (edge_alive_[e]) {
        remove_edge(e);
        on_edge_removed(e, w);
      }
    }
  }
  void remove_vertex(Vertex v) {
    remove_vertex(v, [](EdgeId, Vertex) {});
  }

  template <class Fn>
  void for_each_live_edge(Vertex v, Fn&& fn) const {
    const std::size_t base = g_.offset(v);
    const auto nbrs = g_.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const EdgeId e = slot_edge_[base + i];
      if (edge_alive_[e]) fn(e, nbrs[i]);
    }
  }

  /// Alive common neighbors of u and v reachable through live edges, sorted.
  void live_common_neighbors(Vertex u, Vertex v, std::vector<Vertex>& out) const;

 private:
  const Graph& g_;
  std::vector<EdgeId> slot_edge_;
  std::vector<Edge> endpoints_;
  std::vector<std::uint8_t> edge_alive_;
  std::vector<std::uint8_t> vertex_alive_;
  std::vector<std::uint32_t> live_degree_;
  std::vector<std::uint32_t> alive_degree_;
  std::size_t live_edges_ = 0;
};

/// Builds dense subproblems induced (in the underlying graph) by small
/// vertex sets. Keeps scratch buffers between calls.
class SubproblemBuilder {
 public:
  explicit SubproblemBuilder(const Graph& g);

  /// vertices = common ∪ {u, v}, sorted; dense = induced subgraph.
  void build(Vertex u, Vertex v, std::span<const Vertex> common);
  void build(std::span<const Vertex> sorted_vertices);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  const DenseGraph& dense() const noexcept { return dense_; }

 private:
  const Graph& g_;
  std::vector<std::int32_t> index_;
  std::vector<Vertex> vertices_;
  DenseGraph dense_;
};

}  // namespace hyperclique::detail
