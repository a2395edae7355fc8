#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperclique/geometry.hpp"

namespace hyperclique {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph in compressed sparse row form.
///
/// Adjacency lists are sorted, symmetric, loop-free and duplicate-free.
/// Optionally annotated with a hyperbolic embedding (one point per vertex)
/// and with external labels (the ids used in the file the graph came from).
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph on `n` vertices. Loops are dropped, parallel and
  /// antiparallel edges collapsed. Throws std::out_of_range on ids >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  bool empty() const noexcept { return vertex_count() == 0; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;

  /// O(log min(deg u, deg v)).
  bool adjacent(Vertex u, Vertex v) const;

  /// Start offset of v's list in the flat adjacency array.
  std::size_t offset(Vertex v) const { return offsets_[v]; }
  std::span<const Vertex> flat_adjacency() const { return adjacency_; }

  /// All edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool has_coordinates() const noexcept { return has_coords_; }
  std::span<const PolarPoint> coordinates() const noexcept { return coords_; }
  const PolarPoint& coordinate(Vertex v) const { return coords_[v]; }
  /// Throws std::invalid_argument if the length does not match vertex_count().
  void set_coordinates(std::vector<PolarPoint> coords);
  void clear_coordinates() noexcept {
    coords_.clear();
    has_coords_ = false;
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// External id of v; v itself when the graph carries no labels.
  std::int64_t label(Vertex v) const { return labels_.empty() ? v : labels_[v]; }
  std::span<const std::int64_t> labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::int64_t> labels);

  /// Structural equality (adjacency only).
  bool same_structure(const Graph& other) const {
    return offsets_ == other.offsets_ && adjacency_ == other.adjacency_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<PolarPoint> coords_;
  std::vector<std::int64_t> labels_;
  bool has_coords_ = false;
};

/// A subset of [0, n) with O(1) membership and insertion-ordered iteration.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : member_(universe, 0) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet all(std::size_t universe);

  std::size_t universe() const noexcept { return member_.size(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(Vertex v) const { return v < member_.size() && member_[v] != 0; }
  /// Returns false if v was already present.
  bool insert(Vertex v);
  /// O(size) removal.
  bool erase(Vertex v);

  /// Members in insertion order.
  std::span<const Vertex> members() const noexcept { return members_; }
  std::vector<Vertex> sorted() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.member_ == b.member_;
  }

 private:
  std::vector<std::uint8_t> member_;
  std::vector<Vertex> members_;
};

/// Sorted intersection of the neighborhoods of u and v, optionally restricted
/// to `filter`. Cost O(deg u + deg v).
std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v,
                                     const VertexSet* filter = nullptr);

struct Subgraph {
  Graph graph;
  /// to_parent[i] is the id in the parent graph of subgraph vertex i.
  std::vector<Vertex> to_parent;
};

/// Subgraph induced by `s`, renumbered densely in increasing parent-id order.
/// Coordinates and labels carry over.
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// True if every pair of distinct vertices in `vertices` is adjacent in g.
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

}  // namespace hyperclique
