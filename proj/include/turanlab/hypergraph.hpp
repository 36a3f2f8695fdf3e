#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turanlab/vertex_set.hpp"

namespace turanlab {

// Raised when an operation's input violates its stated precondition.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// n labeled vertices 1..n, uniformity r, and a set of r-edges kept sorted in
// bitmask (colex) order. r = 2 is an ordinary graph.
template <std::size_t Words>
class BasicHypergraph {
public:
  using Set = BasicVertexSet<Words>;

  BasicHypergraph() = default;

  BasicHypergraph(int n, int r) : n_(n), r_(r) {
    if (n < 0 || n > Set::kCapacity)
      throw PreconditionError("vertex count " + std::to_string(n) + " outside supported range 0.." +
                              std::to_string(Set::kCapacity));
    if (r < 1) throw PreconditionError("uniformity must be positive");
  }

  BasicHypergraph(int n, int r, std::vector<Set> edges) : BasicHypergraph(n, r) {
    for (const auto& e : edges) validate(e);
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw PreconditionError("duplicate edge");
    edges_ = std::move(edges);
  }

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Set>& edges() const { return edges_; }

  Set vertices() const { return n_ > 0 ? Set::range(1, n_) : Set{}; }

  bool contains(const Set& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  // Inserts e; returns false (and leaves the edge set unchanged) if already present.
  bool add_edge(const Set& e) {
    validate(e);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return false;
    edges_.insert(it, e);
    return true;
  }

  bool remove_edge(const Set& e) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return false;
    edges_.erase(it);
    return true;
  }

  bool is_valid_edge(const Set& e) const { return e.size() == r_ && (e.empty() || e.last() <= n_); }

  friend bool operator==(const BasicHypergraph&, const BasicHypergraph&) = default;

private:
  void validate(const Set& e) const {
    if (!is_valid_edge(e))
      throw PreconditionError("edge " + e.to_string() + " is not an " + std::to_string(r_) + "-subset of [" +
                              std::to_string(n_) + "]");
  }

  int n_ = 0;
  int r_ = 2;
  std::vector<Set> edges_;
};

using Hypergraph = BasicHypergraph<1>;
using WideHypergraph = BasicHypergraph<4>;

// All (r-1)-subsets of some edge, sorted.
template <std::size_t W>
std::vector<BasicVertexSet<W>> shadow(const BasicHypergraph<W>& h) {
  std::vector<BasicVertexSet<W>> out;
  out.reserve(h.size() * static_cast<std::size_t>(h.r()));
  for (const auto& e : h.edges())
    e.for_each([&](Vertex v) {
      auto a = e;
      a.erase(v);
      out.push_back(a);
    });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// N(T) = { v : T + v is an edge }.
template <std::size_t W>
BasicVertexSet<W> neighborhood(const BasicHypergraph<W>& h, const BasicVertexSet<W>& t) {
  if (t.size() != h.r() - 1)
    throw PreconditionError("neighborhood needs an (r-1)-set, got " + t.to_string());
  BasicVertexSet<W> out;
  for (Vertex v = 1; v <= h.n(); ++v) {
    if (t.contains(v)) continue;
    auto e = t;
    e.insert(v);
    if (h.contains(e)) out.insert(v);
  }
  return out;
}

template <std::size_t W>
int degree(const BasicHypergraph<W>& h, const BasicVertexSet<W>& t) {
  return neighborhood(h, t).size();
}

// L(S): shadow sets A with A + s an edge for every s in S.
template <std::size_t W>
std::vector<BasicVertexSet<W>> link(const BasicHypergraph<W>& h, const BasicVertexSet<W>& s) {
  if (s.empty()) throw PreconditionError("link of the empty set is undefined");
  std::vector<BasicVertexSet<W>> out;
  for (const auto& a : shadow(h)) {
    if (a.intersects(s)) continue;
    bool all = true;
    s.for_each([&](Vertex v) {
      if (!all) return;
      auto e = a;
      e.insert(v);
      all = h.contains(e);
    });
    if (all) out.push_back(a);
  }
  return out;
}

// L(u, v); L(u, u) is L({u}).
template <std::size_t W>
std::vector<BasicVertexSet<W>> link(const BasicHypergraph<W>& h, OrderedPair p) {
  BasicVertexSet<W> s;
  s.insert(p.first);
  s.insert(p.second);
  return link(h, s);
}

// Graph on [n] whose edges are the pairs covered by some edge of h.
template <std::size_t W>
BasicHypergraph<W> auxiliary_graph(const BasicHypergraph<W>& h) {
  std::vector<BasicVertexSet<W>> pairs;
  for (const auto& e : h.edges()) {
    auto vs = e.members();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) pairs.push_back(BasicVertexSet<W>{vs[i], vs[j]});
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return BasicHypergraph<W>(h.n(), 2, std::move(pairs));
}

// adjacency[v] for v in 1..n (index 0 unused). Requires r = 2.
template <std::size_t W>
std::vector<BasicVertexSet<W>> adjacency(const BasicHypergraph<W>& g) {
  if (g.r() != 2) throw PreconditionError("adjacency requires a graph (r = 2)");
  std::vector<BasicVertexSet<W>> adj(static_cast<std::size_t>(g.n()) + 1);
  for (const auto& e : g.edges()) {
    Vertex a = e.first();
    Vertex b = e.last();
    adj[a].insert(b);
    adj[b].insert(a);
  }
  return adj;
}

// Vertex link graphs of a 3-graph: pair_link[u][a] = { b : {u, a, b} in H }.
template <std::size_t W>
std::vector<std::vector<BasicVertexSet<W>>> link_adjacency(const BasicHypergraph<W>& h) {
  if (h.r() != 3) throw PreconditionError("link adjacency requires a 3-graph");
  const auto n = static_cast<std::size_t>(h.n());
  std::vector<std::vector<BasicVertexSet<W>>> out(n + 1, std::vector<BasicVertexSet<W>>(n + 1));
  for (const auto& e : h.edges()) {
    auto v = e.members();
    for (int i = 0; i < 3; ++i) {
      Vertex u = v[i], a = v[(i + 1) % 3], b = v[(i + 2) % 3];
      out[u][a].insert(b);
      out[u][b].insert(a);
    }
  }
  return out;
}

// Builds a set from labels; convenience for tests and constructions.
template <std::size_t W = 1>
BasicVertexSet<W> make_set(std::initializer_list<Vertex> labels) {
  return BasicVertexSet<W>(labels);
}

template <std::size_t W = 1>
BasicHypergraph<W> make_hypergraph(int n, int r, std::initializer_list<std::initializer_list<Vertex>> edges) {
  std::vector<BasicVertexSet<W>> es;
  for (auto e : edges) es.emplace_back(e);
  return BasicHypergraph<W>(n, r, std::move(es));
}

}  // namespace turanlab
