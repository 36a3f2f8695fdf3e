#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

// Ordered list of disjoint vertex blocks covering [n].
template <std::size_t W>
struct BasicPartition {
  std::vector<BasicVertexSet<W>> blocks;

  std::size_t block_count() const { return blocks.size(); }

  // Index of the block holding v, or -1.
  int block_of(Vertex v) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].contains(v)) return static_cast<int>(i);
    return -1;
  }

  std::vector<int> sizes() const {
    std::vector<int> s;
    for (const auto& b : blocks) s.push_back(b.size());
    return s;
  }

  friend bool operator==(const BasicPartition&, const BasicPartition&) = default;
};

using Partition = BasicPartition<1>;

template <std::size_t W>
bool is_partition_of(const BasicPartition<W>& p, int n) {
  BasicVertexSet<W> seen;
  for (const auto& b : p.blocks) {
    if (b.intersects(seen)) return false;
    seen |= b;
  }
  return n == 0 ? seen.empty() : seen == BasicVertexSet<W>::range(1, n);
}

// Same blocks up to reordering.
template <std::size_t W>
bool same_up_to_relabeling(const BasicPartition<W>& a, const BasicPartition<W>& b) {
  auto x = a.blocks, y = b.blocks;
  std::erase_if(x, [](const auto& s) { return s.empty(); });
  std::erase_if(y, [](const auto& s) { return s.empty(); });
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// Block index per vertex (index 0 unused).
template <std::size_t W>
std::vector<int> block_index(const BasicPartition<W>& p, int n) {
  std::vector<int> idx(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    p.blocks[i].for_each([&](Vertex v) { idx[static_cast<std::size_t>(v)] = static_cast<int>(i); });
  return idx;
}

// Edges with at least two vertices in one block.
template <std::size_t W>
std::uint64_t count_bad_edges(const BasicHypergraph<W>& h, const BasicPartition<W>& p) {
  std::uint64_t bad = 0;
  for (const auto& e : h.edges())
    for (const auto& b : p.blocks)
      if ((e & b).size() >= 2) {
        ++bad;
        break;
      }
  return bad;
}

// Edges of a graph crossing between different blocks.
template <std::size_t W>
std::uint64_t count_crossing_edges(const BasicHypergraph<W>& g, const BasicPartition<W>& p) {
  return g.size() - count_bad_edges(g, p);
}

}  // namespace turanlab
