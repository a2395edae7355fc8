#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperclique/graph.hpp"

namespace hyperclique {

/// Small graph stored as a symmetric bit matrix. Subproblems handed to the
/// co-bipartite machinery are nearly complete, so their complements are read
/// off the rows with word operations instead of being materialized.
class DenseGraph {
 public:
  DenseGraph() = default;
  explicit DenseGraph(std::size_t n);

  static DenseGraph from_graph(const Graph& g);

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  void add_edge(std::size_t u, std::size_t v) {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  std::span<const std::uint64_t> row(std::size_t u) const { return {bits_.data() + u * words_, words_}; }

  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class Side : std::uint8_t { A, B };

/// Two-coloring of the complement: every complement edge joins A and B, so
/// each side is a clique of the original graph.
struct Bipartition {
  std::vector<Side> side;
};

struct CobipartiteCheck {
  std::optional<Bipartition> bipartition;
  /// When not co-bipartite: an odd cycle of the complement, in cycle order.
  std::vector<std::size_t> odd_cycle;

  bool cobipartite() const noexcept { return bipartition.has_value(); }
};

/// Fewest edges any co-bipartite graph on n vertices can have:
/// C(ceil(n/2), 2) + C(floor(n/2), 2).
std::size_t min_cobipartite_edges(std::size_t n);

/// True when `g` has too few edges to be co-bipartite. False is inconclusive.
bool quick_reject_cobipartite(const DenseGraph& g);
bool quick_reject_cobipartite(const Graph& g);

/// BFS 2-coloring of the complement without materializing it.
CobipartiteCheck complement_bipartition(const DenseGraph& g);
CobipartiteCheck complement_bipartition(const Graph& g);

struct MatchingResult {
  /// left_mate[l] is the matched right vertex or -1; right_mate likewise.
  std::vector<std::int32_t> left_mate;
  std::vector<std::int32_t> right_mate;
  std::size_t size = 0;
};

/// Maximum-cardinality bipartite matching, O(E sqrt(V)).
/// adjacency[l] lists the right-side neighbors of left vertex l.
MatchingResult hopcroft_karp(std::size_t left_count, std::size_t right_count,
                             std::span<const std::vector<std::uint32_t>> adjacency);

/// Same, with edges given by a predicate `edge(l, r)`.
template <class EdgeOracle>
MatchingResult hopcroft_karp(std::size_t left_count, std::size_t right_count, EdgeOracle&& edge) {
  std::vector<std::vector<std::uint32_t>> adjacency(left_count);
  for (std::size_t l = 0; l < left_count; ++l) {
    for (std::size_t r = 0; r < right_count; ++r) {
      if (edge(l, r)) adjacency[l].push_back(static_cast<std::uint32_t>(r));
    }
  }
  return hopcroft_karp(left_count, right_count, std::span<const std::vector<std::uint32_t>>(adjacency));
}

/// Maximum clique of a co-bipartite graph: the complement of a minimum vertex
/// cover of the bipartite complement (Koenig). Indices ascend. Pass a known
/// bipartition to skip recomputing it. Throws ContractViolation if `g` is not
/// co-bipartite.
std::vector<std::size_t> max_clique_cobipartite(const DenseGraph& g, const Bipartition* known = nullptr);
std::vector<Vertex> max_clique_cobipartite(const Graph& g);

}  // namespace hyperclique
