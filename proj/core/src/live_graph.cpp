#include "live_graph.hpp"

#include <algorithm>

namespace hyperclique::detail {

LiveGraph::LiveGraph(const Graph& g)
    : g_(g),
      slot_edge_(g.flat_adjacency().size()),
      edge_alive_(g.edge_count(), 1),
      vertex_alive_(g.vertex_count(), 1),
      live_degree_(g.vertex_count()),
      alive_degree_(g.vertex_count()),
      live_edges_(g.edge_count()) {
  const std::size_t n = g.vertex_count();
  endpoints_.reserve(g.edge_count());
  // Lower neighbors of each vertex precede upper ones and appear in
  // ascending order, so the reverse slot of edge (u, w), u < w, is the next
  // unfilled lower slot of w.
  std::vector<std::size_t> lower_fill(n);
  for (Vertex v = 0; v < n; ++v) {
    lower_fill[v] = g.offset(v);
    live_degree_[v] = static_cast<std::uint32_t>(g.degree(v));
    alive_degree_[v] = live_degree_[v];
  }
  for (Vertex u = 0; u < n; ++u) {
    const std::size_t base = g.offset(u);
    const auto nbrs = g.neighbors(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex w = nbrs[i];
      if (w < u) continue;
      const auto id = static_cast<EdgeId>(endpoints_.size());
      endpoints_.push_back({u, w});
      slot_edge_[base + i] = id;
      slot_edge_[lower_fill[w]++] = id;
    }
  }
}

std::optional<EdgeId> LiveGraph::find_edge(Vertex u, Vertex v) const {
  if (u >= g_.vertex_count() || v >= g_.vertex_count()) return std::nullopt;
  const auto nbrs = g_.neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return slot_edge_[g_.offset(u) + static_cast<std::size_t>(it - nbrs.begin())];
}

std::size_t LiveGraph::residual_vertices() const {
  std::size_t count = 0;
  for (std::size_t v = 0; v < vertex_alive_.size(); ++v) {
    if (vertex_alive_[v] && live_degree_[v] > 0) ++count;
  }
  return count;
}

void LiveGraph::remove_edge(EdgeId e) {
  if (!edge_alive_[e]) return;
  edge_alive_[e] = 0;
  --live_degree_[endpoints_[e].u];
  --live_degree_[endpoints_[e].v];
  --live_edges_;
}

void LiveGraph::live_common_neighbors(Vertex u, Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  const auto a = g_.neighbors(u);
  const auto b = g_.neighbors(v);
  const std::size_t base_a = g_.offset(u);
  const std::size_t base_b = g_.offset(v);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      if (vertex_alive_[a[i]] && edge_alive_[slot_edge_[base_a + i]] && edge_alive_[slot_edge_[base_b + j]]) {
        out.push_back(a[i]);
      }
      ++i;
      ++j;
    }
  }
}

SubproblemBuilder::SubproblemBuilder(const Graph& g) : g_(g), index_(g.vertex_count(), -1) {}

void SubproblemBuilder::build(Vertex u, Vertex v, std::span<const Vertex> common) {
  vertices_.assign(common.begin(), common.end());
  const Vertex lo = std::min(u, v);
  const Vertex hi = std::max(u, v);
  vertices_.insert(std::lower_bound(vertices_.begin(), vertices_.end(), lo), lo);
  vertices_.insert(std::lower_bound(vertices_.begin(), vertices_.end(), hi), hi);
  build(std::span<const Vertex>(vertices_));
}

void SubproblemBuilder::build(std::span<const Vertex> sorted_vertices) {
  if (sorted_vertices.data() != vertices_.data()) {
    vertices_.assign(sorted_vertices.begin(), sorted_vertices.end());
  }
  const std::size_t k = vertices_.size();
  dense_ = DenseGraph(k);
  for (std::size_t i = 0; i < k; ++i) index_[vertices_[i]] = static_cast<std::int32_t>(i);
  for (std::size_t i = 0; i < k; ++i) {
    const auto nbrs = g_.neighbors(vertices_[i]);
    if (nbrs.size() > 8 * k) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (std::binary_search(nbrs.begin(), nbrs.end(), vertices_[j])) dense_.add_edge(i, j);
      }
    } else {
      for (Vertex w : nbrs) {
        const std::int32_t j = index_[w];
        if (j > static_cast<std::int32_t>(i)) dense_.add_edge(i, static_cast<std::size_t>(j));
      }
    }
  }
  for (Vertex w : vertices_) index_[w] = -1;
}

}  // namespace hyperclique::detail
