#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

namespace detail {

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Pivot-based clique enumeration. Every clique inside `cand` is represented
// exactly once as (held vertices) + (any subset of pivots); counts[h + j] gains
// C(p, j) at each leaf.
template <std::size_t W>
void pivot_count(const std::vector<BasicVertexSet<W>>& adj, BasicVertexSet<W> cand, int held, int pivots,
                 std::vector<std::uint64_t>& counts) {
  if (cand.empty()) {
    for (int j = 0; j <= pivots; ++j) counts[static_cast<std::size_t>(held + j)] += binomial(pivots, j);
    return;
  }
  Vertex pivot = 0;
  int best = -1;
  cand.for_each([&](Vertex u) {
    int d = (adj[u] & cand).size();
    if (d > best) {
      best = d;
      pivot = u;
    }
  });
  pivot_count(adj, cand & adj[pivot], held, pivots + 1, counts);
  auto branch = cand - adj[pivot];
  branch.erase(pivot);
  branch.for_each([&](Vertex v) {
    pivot_count(adj, cand & adj[v], held + 1, pivots, counts);
    cand.erase(v);
  });
}

template <std::size_t W>
bool has_clique(const std::vector<BasicVertexSet<W>>& adj, BasicVertexSet<W> cand, int needed,
                std::vector<Vertex>& found) {
  if (needed == 0) return true;
  if (cand.size() < needed) return false;
  while (!cand.empty()) {
    if (cand.size() < needed) return false;
    Vertex v = cand.first();
    cand.erase(v);
    found.push_back(v);
    if (has_clique(adj, cand & adj[v], needed - 1, found)) return true;
    found.pop_back();
  }
  return false;
}

}  // namespace detail

// counts[i] = number of i-vertex cliques for i = 0..n (counts[0] = 1, counts[1] = n,
// isolated vertices included).
template <std::size_t W>
std::vector<std::uint64_t> clique_counts(const BasicHypergraph<W>& g) {
  auto adj = adjacency(g);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.n()) + 1, 0);
  counts[0] = 1;
  for (Vertex v = 1; v <= g.n(); ++v) {
    auto later = adj[v];
    for (Vertex u = 1; u <= v; ++u) later.erase(u);
    detail::pivot_count(adj, later, 1, 0, counts);
  }
  return counts;
}

template <std::size_t W>
std::uint64_t count_cliques(const BasicHypergraph<W>& g, int size) {
  if (size < 1) throw PreconditionError("clique size must be at least 1");
  if (size > g.n()) return 0;
  return clique_counts(g)[static_cast<std::size_t>(size)];
}

// Some q-clique, if one exists.
template <std::size_t W>
std::optional<std::vector<Vertex>> find_clique(const BasicHypergraph<W>& g, int q) {
  if (q < 1) throw PreconditionError("clique size must be at least 1");
  auto adj = adjacency(g);
  std::vector<Vertex> found;
  if (detail::has_clique(adj, g.vertices(), q, found)) return found;
  return std::nullopt;
}

template <std::size_t W>
bool contains_clique(const BasicHypergraph<W>& g, int q) {
  return find_clique(g, q).has_value();
}

}  // namespace turanlab
