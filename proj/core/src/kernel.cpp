#include "hyperclique/kernel.hpp"

#include <algorithm>
#include <random>

#include "hyperclique/timing.hpp"

namespace hyperclique {

std::vector<Vertex> initial_clique(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};

  // Counting sort by degree, descending; stable, so ties keep ascending id.
  const std::size_t max_deg = g.max_degree();
  std::vector<std::size_t> bucket_start(max_deg + 2, 0);
  for (Vertex v = 0; v < n; ++v) ++bucket_start[max_deg - g.degree(v) + 1];
  for (std::size_t i = 1; i < bucket_start.size(); ++i) bucket_start[i] += bucket_start[i - 1];
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[bucket_start[max_deg - g.degree(v)]++] = v;

  // links[v] counts clique members adjacent to v.
  std::vector<std::uint32_t> links(n, 0);
  std::vector<Vertex> clique;
  for (Vertex v : order) {
    if (links[v] != clique.size()) continue;
    clique.push_back(v);
    for (Vertex w : g.neighbors(v)) ++links[w];
  }
  return clique;
}

VertexSet peel(const Graph& g, std::size_t k, std::optional<std::uint64_t> shuffle_seed) {
  const std::size_t n = g.vertex_count();
  // Every queued vertex is eventually removed, so its degree no longer
  // matters and the kernel is exactly the never-queued set.
  std::vector<std::uint32_t> degree(n);
  std::vector<std::uint8_t> queued(n, 0);
  std::vector<Vertex> worklist;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = static_cast<std::uint32_t>(g.degree(v));
    if (degree[v] < k) {
      worklist.push_back(v);
      queued[v] = 1;
    }
  }

  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  for (std::size_t head = 0; head < worklist.size(); ++head) {
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(head, worklist.size() - 1);
      std::swap(worklist[head], worklist[pick(*rng)]);
    }
    for (Vertex w : g.neighbors(worklist[head])) {
      if (queued[w]) continue;
      if (--degree[w] < k) {
        queued[w] = 1;
        worklist.push_back(w);
      }
    }
  }

  VertexSet kernel(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!queued[v]) kernel.insert(v);
  }
  return kernel;
}

KernelResult kernelize(const Graph& g) {
  KernelResult result;
  {
    ScopedTimer timer(result.init_ms);
    result.initial_clique = initial_clique(g);
  }
  {
    ScopedTimer timer(result.kernel_ms);
    result.kernel = peel(g, result.initial_clique.size());
    std::size_t twice = 0;
    for (Vertex v : result.kernel.members()) {
      for (Vertex w : g.neighbors(v)) twice += result.kernel.contains(w) ? 1 : 0;
    }
    result.kernel_edge_count = twice / 2;
  }
  return result;
}

}  // namespace hyperclique
