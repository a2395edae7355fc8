#include "hyperclique/matching.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "hyperclique/error.hpp"

namespace hyperclique {
namespace {

constexpr std::int32_t kFree = -1;

std::uint64_t tail_mask(std::size_t n, std::size_t word) {
  const std::size_t end = std::min(n, (word + 1) * 64);
  const std::size_t bits = end - word * 64;
  return bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

template <class Fn>
void for_each_bit(std::uint64_t word, std::size_t base, Fn&& fn) {
  while (word != 0) {
    fn(base + static_cast<std::size_t>(std::countr_zero(word)));
    word &= word - 1;
  }
}

}  // namespace

DenseGraph::DenseGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

DenseGraph DenseGraph::from_graph(const Graph& g) {
  DenseGraph d(g.vertex_count());
  for (const Edge& e : g.edges()) d.add_edge(e.u, e.v);
  return d;
}

std::size_t DenseGraph::degree(std::size_t u) const {
  std::size_t deg = 0;
  for (std::uint64_t w : row(u)) deg += static_cast<std::size_t>(std::popcount(w));
  return deg;
}

std::size_t DenseGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::size_t min_cobipartite_edges(std::size_t n) {
  const std::size_t a = (n + 1) / 2;
  const std::size_t b = n / 2;
  return a * (a - (a > 0 ? 1 : 0)) / 2 + b * (b - (b > 0 ? 1 : 0)) / 2;
}

bool quick_reject_cobipartite(const DenseGraph& g) { return g.edge_count() < min_cobipartite_edges(g.size()); }

bool quick_reject_cobipartite(const Graph& g) {
  return g.edge_count() < min_cobipartite_edges(g.vertex_count());
}

CobipartiteCheck complement_bipartition(const DenseGraph& g) {
  const std::size_t n = g.size();
  const std::size_t words = g.words();
  CobipartiteCheck result;

  std::vector<std::uint64_t> unvisited(words, 0);
  std::vector<std::uint64_t> color_mask[2] = {std::vector<std::uint64_t>(words, 0),
                                              std::vector<std::uint64_t>(words, 0)};
  for (std::size_t w = 0; w < words; ++w) unvisited[w] = tail_mask(n, w);

  std::vector<std::uint8_t> color(n, 0);
  std::vector<std::size_t> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  std::vector<std::size_t> queue;
  queue.reserve(n);
  std::vector<std::uint64_t> comp(words);

  auto visit = [&](std::size_t v, std::uint8_t c, std::size_t from, std::size_t d) {
    color[v] = c;
    parent[v] = from;
    depth[v] = d;
    color_mask[c][v / 64] |= std::uint64_t{1} << (v % 64);
    unvisited[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    queue.push_back(v);
  };

  auto odd_cycle = [&](std::size_t x, std::size_t y) {
    std::vector<std::size_t> from_x{x};
    std::vector<std::size_t> from_y{y};
    while (from_x.back() != from_y.back()) {
      if (depth[from_x.back()] >= depth[from_y.back()]) {
        from_x.push_back(parent[from_x.back()]);
      } else {
        from_y.push_back(parent[from_y.back()]);
      }
    }
    from_y.pop_back();  // the common ancestor is already in from_x
    std::reverse(from_y.begin(), from_y.end());
    from_x.insert(from_x.end(), from_y.begin(), from_y.end());
    return from_x;
  };

  for (std::size_t start = 0; start < n; ++start) {
    if (!((unvisited[start / 64] >> (start % 64)) & 1u)) continue;
    queue.clear();
    visit(start, 0, start, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      const auto row = g.row(x);
      for (std::size_t w = 0; w < words; ++w) {
        comp[w] = ~row[w] & tail_mask(n, w);
      }
      comp[x / 64] &= ~(std::uint64_t{1} << (x % 64));

      const auto& same = color_mask[color[x]];
      for (std::size_t w = 0; w < words; ++w) {
        const std::uint64_t clash = comp[w] & same[w];
        if (clash != 0) {
          const std::size_t y = w * 64 + static_cast<std::size_t>(std::countr_zero(clash));
          result.odd_cycle = odd_cycle(x, y);
          return result;
        }
      }
      const std::uint8_t other = color[x] ^ 1u;
      for (std::size_t w = 0; w < words; ++w) {
        for_each_bit(comp[w] & unvisited[w], w * 64,
                     [&](std::size_t y) { visit(y, other, x, depth[x] + 1); });
      }
    }
  }

  Bipartition partition;
  partition.side.resize(n);
  for (std::size_t v = 0; v < n; ++v) partition.side[v] = color[v] == 0 ? Side::A : Side::B;
  result.bipartition = std::move(partition);
  return result;
}

CobipartiteCheck complement_bipartition(const Graph& g) {
  return complement_bipartition(DenseGraph::from_graph(g));
}

MatchingResult hopcroft_karp(std::size_t left_count, std::size_t right_count,
                             std::span<const std::vector<std::uint32_t>> adjacency) {
  MatchingResult m;
  m.left_mate.assign(left_count, kFree);
  m.right_mate.assign(right_count, kFree);
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(left_count);
  std::vector<std::size_t> queue;
  std::vector<std::size_t> next_edge(left_count);

  auto bfs = [&] {
    queue.clear();
    for (std::size_t l = 0; l < left_count; ++l) {
      if (m.left_mate[l] == kFree) {
        dist[l] = 0;
        queue.push_back(l);
      } else {
        dist[l] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t l = queue[head];
      for (std::uint32_t r : adjacency[l]) {
        const std::int32_t mate = m.right_mate[r];
        if (mate == kFree) {
          found = true;
        } else if (dist[static_cast<std::size_t>(mate)] == kInf) {
          dist[static_cast<std::size_t>(mate)] = dist[l] + 1;
          queue.push_back(static_cast<std::size_t>(mate));
        }
      }
    }
    return found;
  };

  // Iterative layered DFS along dist; next_edge keeps per-vertex progress.
  std::vector<std::size_t> stack;
  auto augment = [&](std::size_t root) {
    stack.clear();
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t l = stack.back();
      bool advanced = false;
      while (next_edge[l] < adjacency[l].size()) {
        const std::uint32_t r = adjacency[l][next_edge[l]];
        const std::int32_t mate = m.right_mate[r];
        if (mate == kFree) {
          // Flip the path recorded on the stack.
          std::uint32_t carry = r;
          for (std::size_t i = stack.size(); i-- > 0;) {
            const std::size_t left = stack[i];
            const std::int32_t previous = m.left_mate[left];
            m.left_mate[left] = static_cast<std::int32_t>(carry);
            m.right_mate[carry] = static_cast<std::int32_t>(left);
            if (i > 0) carry = static_cast<std::uint32_t>(previous);
          }
          return true;
        }
        const auto next = static_cast<std::size_t>(mate);
        if (dist[next] == dist[l] + 1) {
          stack.push_back(next);
          advanced = true;
          break;
        }
        ++next_edge[l];
      }
      if (!advanced) {
        dist[l] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++next_edge[stack.back()];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(next_edge.begin(), next_edge.end(), 0);
    for (std::size_t l = 0; l < left_count; ++l) {
      if (m.left_mate[l] == kFree && augment(l)) ++m.size;
    }
  }
  return m;
}

std::vector<std::size_t> max_clique_cobipartite(const DenseGraph& g, const Bipartition* known) {
  const std::size_t n = g.size();
  CobipartiteCheck check;
  if (known == nullptr) {
    check = complement_bipartition(g);
    if (!check.cobipartite()) {
      throw ContractViolation("max_clique_cobipartite: input is not co-bipartite");
    }
    known = &*check.bipartition;
  }

  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  std::vector<std::uint32_t> right_index(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (known->side[v] == Side::A) {
      left.push_back(v);
    } else {
      right_index[v] = static_cast<std::uint32_t>(right.size());
      right.push_back(v);
    }
  }

  // Complement edges between the sides.
  std::vector<std::uint64_t> right_mask(g.words(), 0);
  for (std::size_t v : right) right_mask[v / 64] |= std::uint64_t{1} << (v % 64);
  std::vector<std::vector<std::uint32_t>> adjacency(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    const auto row = g.row(left[i]);
    for (std::size_t w = 0; w < g.words(); ++w) {
      for_each_bit(~row[w] & right_mask[w], w * 64,
                   [&](std::size_t v) { adjacency[i].push_back(right_index[v]); });
    }
  }

  const MatchingResult matching =
      hopcroft_karp(left.size(), right.size(), std::span<const std::vector<std::uint32_t>>(adjacency));

  // Alternating reachability from free left vertices.
  std::vector<std::uint8_t> left_seen(left.size(), 0);
  std::vector<std::uint8_t> right_seen(right.size(), 0);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (matching.left_mate[i] == kFree) {
      left_seen[i] = 1;
      queue.push_back(i);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t r : adjacency[queue[head]]) {
      if (right_seen[r]) continue;
      right_seen[r] = 1;
      const std::int32_t mate = matching.right_mate[r];
      if (mate != kFree && !left_seen[static_cast<std::size_t>(mate)]) {
        left_seen[static_cast<std::size_t>(mate)] = 1;
        queue.push_back(static_cast<std::size_t>(mate));
      }
    }
  }

  // Cover = (left unseen) + (right seen); the clique is everything else.
  std::vector<std::size_t> clique;
  clique.reserve(n - matching.size);
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left_seen[i]) clique.push_back(left[i]);
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    if (!right_seen[i]) clique.push_back(right[i]);
  }
  std::sort(clique.begin(), clique.end());

#ifndef NDEBUG
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!g.adjacent(clique[i], clique[j])) {
        throw ContractViolation("max_clique_cobipartite: result is not a clique");
      }
    }
  }
  if (clique.size() + matching.size != n) {
    throw ContractViolation("max_clique_cobipartite: Koenig identity violated");
  }
#endif
  return clique;
}

std::vector<Vertex> max_clique_cobipartite(const Graph& g) {
  const auto local = max_clique_cobipartite(DenseGraph::from_graph(g));
  return {local.begin(), local.end()};
}

}  // namespace hyperclique
