#pragma once

#include <algorithm>
#include <vector>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

namespace detail {

template <std::size_t W>
class Embedder {
public:
  Embedder(const BasicHypergraph<W>& f, const BasicHypergraph<W>& h) : h_(h) {
    const auto nf = static_cast<std::size_t>(f.n());
    std::vector<int> deg_f(nf + 1, 0);
    for (const auto& e : f.edges()) e.for_each([&](Vertex v) { ++deg_f[static_cast<std::size_t>(v)]; });
    deg_h_.assign(static_cast<std::size_t>(h.n()) + 1, 0);
    for (const auto& e : h.edges()) e.for_each([&](Vertex v) { ++deg_h_[static_cast<std::size_t>(v)]; });

    // Greedy order: most edges into already placed vertices, then highest degree.
    std::vector<bool> placed(nf + 1, false);
    BasicVertexSet<W> placed_set;
    for (std::size_t step = 0; step < nf; ++step) {
      Vertex best = 0;
      int best_key1 = -1, best_key2 = -1;
      for (Vertex v = 1; v <= f.n(); ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int touching = 0;
        for (const auto& e : f.edges())
          if (e.contains(v) && e.intersects(placed_set)) ++touching;
        if (touching > best_key1 || (touching == best_key1 && deg_f[static_cast<std::size_t>(v)] > best_key2)) {
          best = v;
          best_key1 = touching;
          best_key2 = deg_f[static_cast<std::size_t>(v)];
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      placed_set.insert(best);
      order_.push_back(best);
      need_degree_.push_back(deg_f[static_cast<std::size_t>(best)]);
      std::vector<BasicVertexSet<W>> completed;
      for (const auto& e : f.edges())
        if (e.contains(best) && e.is_subset_of(placed_set)) completed.push_back(e);
      completes_.push_back(std::move(completed));
    }
    image_.assign(nf + 1, 0);
  }

  bool run() { return extend(0); }

private:
  bool extend(std::size_t pos) {
    if (pos == order_.size()) return true;
    Vertex fv = order_[pos];
    for (Vertex hv = 1; hv <= h_.n(); ++hv) {
      if (used_.contains(hv) || deg_h_[static_cast<std::size_t>(hv)] < need_degree_[pos]) continue;
      image_[static_cast<std::size_t>(fv)] = hv;
      bool ok = true;
      for (const auto& e : completes_[pos]) {
        BasicVertexSet<W> mapped;
        e.for_each([&](Vertex v) { mapped.insert(image_[static_cast<std::size_t>(v)]); });
        if (!h_.contains(mapped)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used_.insert(hv);
      if (extend(pos + 1)) return true;
      used_.erase(hv);
    }
    return false;
  }

  const BasicHypergraph<W>& h_;
  std::vector<int> deg_h_;
  std::vector<Vertex> order_;
  std::vector<int> need_degree_;
  std::vector<std::vector<BasicVertexSet<W>>> completes_;
  std::vector<Vertex> image_;
  BasicVertexSet<W> used_;
};

}  // namespace detail

// True iff some injective vertex map sends every edge of f onto an edge of h.
template <std::size_t W>
bool is_subgraph(const BasicHypergraph<W>& f, const BasicHypergraph<W>& h) {
  if (f.r() != h.r())
    throw PreconditionError("uniformity mismatch: " + std::to_string(f.r()) + " vs " + std::to_string(h.r()));
  if (f.n() > h.n() || f.size() > h.size()) return false;
  return detail::Embedder<W>(f, h).run();
}

}  // namespace turanlab
