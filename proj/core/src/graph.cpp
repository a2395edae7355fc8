#include "hyperclique/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hyperclique {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  std::vector<std::size_t> counts(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::out_of_range("Graph::from_edges: edge (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") out of range for n = " + std::to_string(n));
    }
    if (e.u == e.v) continue;
    ++counts[e.u + 1];
    ++counts[e.v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) counts[i] += counts[i - 1];

  std::vector<Vertex> adjacency(counts[n]);
  std::vector<std::size_t> fill(counts.begin(), counts.end() - 1);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    adjacency[fill[e.u]++] = e.v;
    adjacency[fill[e.v]++] = e.u;
  }

  // Sort each list, drop duplicates and compact in place.
  g.offsets_.assign(n + 1, 0);
  std::size_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(counts[v]);
    auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) adjacency[write++] = *it;
    g.offsets_[v + 1] = write;
  }
  adjacency.resize(write);
  adjacency.shrink_to_fit();
  g.adjacency_ = std::move(adjacency);
  return g;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void Graph::set_coordinates(std::vector<PolarPoint> coords) {
  if (coords.size() != vertex_count()) {
    throw std::invalid_argument("Graph::set_coordinates: " + std::to_string(coords.size()) +
                                " points for " + std::to_string(vertex_count()) + " vertices");
  }
  coords_ = std::move(coords);
  has_coords_ = true;
}

void Graph::set_labels(std::vector<std::int64_t> labels) {
  if (!labels.empty() && labels.size() != vertex_count()) {
    throw std::invalid_argument("Graph::set_labels: label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : member_(universe, 0) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  s.members_.resize(universe);
  for (std::size_t v = 0; v < universe; ++v) {
    s.member_[v] = 1;
    s.members_[v] = static_cast<Vertex>(v);
  }
  return s;
}

bool VertexSet::insert(Vertex v) {
  if (v >= member_.size()) {
    throw std::out_of_range("VertexSet::insert: vertex " + std::to_string(v) + " outside universe");
  }
  if (member_[v]) return false;
  member_[v] = 1;
  members_.push_back(v);
  return true;
}

bool VertexSet::erase(Vertex v) {
  if (!contains(v)) return false;
  member_[v] = 0;
  members_.erase(std::find(members_.begin(), members_.end(), v));
  return true;
}

std::vector<Vertex> VertexSet::sorted() const {
  std::vector<Vertex> out(members_);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v, const VertexSet* filter) {
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::vector<Vertex> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      if (filter == nullptr || filter->contains(a[i])) out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  Subgraph result;
  result.to_parent = s.sorted();
  const std::size_t k = result.to_parent.size();
  std::vector<std::int64_t> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < k; ++i) index[result.to_parent[i]] = static_cast<std::int64_t>(i);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex p = result.to_parent[i];
    for (Vertex w : g.neighbors(p)) {
      const std::int64_t j = index[w];
      if (j > static_cast<std::int64_t>(i)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  result.graph = Graph::from_edges(k, edges);
  if (g.has_coordinates()) {
    std::vector<PolarPoint> coords(k);
    for (std::size_t i = 0; i < k; ++i) coords[i] = g.coordinate(result.to_parent[i]);
    result.graph.set_coordinates(std::move(coords));
  }
  if (g.has_labels()) {
    std::vector<std::int64_t> labels(k);
    for (std::size_t i = 0; i < k; ++i) labels[i] = g.label(result.to_parent[i]);
    result.graph.set_labels(std::move(labels));
  }
  return result;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

}  // namespace hyperclique
