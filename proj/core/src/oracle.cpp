#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "hyperclique/solver.hpp"

namespace hyperclique {
namespace {

struct Bits {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  void set(std::size_t i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { (i < 64 ? lo : hi) &= ~(std::uint64_t{1} << (i % 64)); }
  bool empty() const { return (lo | hi) == 0; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(lo) + std::popcount(hi)); }
  std::size_t first() const {
    return lo != 0 ? static_cast<std::size_t>(std::countr_zero(lo))
                   : 64 + static_cast<std::size_t>(std::countr_zero(hi));
  }
  Bits operator&(const Bits& o) const { return {lo & o.lo, hi & o.hi}; }
  Bits operator|(const Bits& o) const { return {lo | o.lo, hi | o.hi}; }
  Bits without(const Bits& o) const { return {lo & ~o.lo, hi & ~o.hi}; }
};

class BronKerbosch {
 public:
  explicit BronKerbosch(const Graph& g) : adj_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (Vertex w : g.neighbors(v)) adj_[v].set(w);
    }
  }

  std::vector<Vertex> run() {
    Bits all;
    for (std::size_t v = 0; v < adj_.size(); ++v) all.set(v);
    expand(all, Bits{});
    return best_;
  }

 private:
  void expand(Bits p, Bits x) {
    if (p.empty()) {
      if (x.empty()) offer();
      return;
    }
    // Equal-size branches must survive so ties can be broken.
    if (current_.size() + p.count() < best_.size()) return;
    std::size_t pivot = 0;
    std::size_t pivot_hits = 0;
    bool have_pivot = false;
    for (Bits candidates = p | x; !candidates.empty();) {
      const std::size_t u = candidates.first();
      candidates.reset(u);
      const std::size_t hits = (p & adj_[u]).count();
      if (!have_pivot || hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
        have_pivot = true;
      }
    }
    for (Bits branch = p.without(adj_[pivot]); !branch.empty();) {
      const std::size_t v = branch.first();
      branch.reset(v);
      current_.push_back(static_cast<Vertex>(v));
      expand(p & adj_[v], x & adj_[v]);
      current_.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  void offer() {
    std::vector<Vertex> sorted = current_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() > best_.size() || (sorted.size() == best_.size() && sorted < best_)) {
      best_ = std::move(sorted);
    }
  }

  std::vector<Bits> adj_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

std::vector<Vertex> oracle_max_clique(const Graph& g) {
  if (g.vertex_count() > kOracleVertexLimit) {
    throw std::length_error("oracle_max_clique supports at most " + std::to_string(kOracleVertexLimit) +
                            " vertices");
  }
  return BronKerbosch(g).run();
}

}  // namespace hyperclique
