#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperclique/graph.hpp"

namespace hyperclique {

/// Greedy clique: scan vertices by non-increasing degree (ties by ascending
/// id) and keep each vertex adjacent to every vertex kept so far. O(n + m).
/// Returned in the order the vertices joined.
std::vector<Vertex> initial_clique(const Graph& g);

/// The k-core: repeatedly removes vertices with fewer than k remaining
/// neighbors. The result does not depend on the removal order; passing
/// `shuffle_seed` processes the worklist in a pseudorandom order instead of
/// FIFO, which the tests use to check exactly that.
VertexSet peel(const Graph& g, std::size_t k, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct KernelResult {
  std::vector<Vertex> initial_clique;
  VertexSet kernel;
  std::size_t kernel_edge_count = 0;
  double init_ms = 0;
  double kernel_ms = 0;
};

/// Initial clique followed by peeling at k = |initial clique|. Any clique
/// larger than the initial one lies entirely inside the kernel.
KernelResult kernelize(const Graph& g);

}  // namespace hyperclique
