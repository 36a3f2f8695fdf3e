#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "turanlab/cliques.hpp"
#include "turanlab/hypergraph.hpp"

namespace turanlab {

// Incremental cancellativity for 3-graphs. A 3-graph is cancellative iff no
// pair {p, q} lying in a common N(T) is covered by an edge, so the state keeps
// the covered pairs, the co-neighbor pairs, and N(T) for every pair T.
template <std::size_t W>
class CancellativeState {
public:
  using Set = BasicVertexSet<W>;

  explicit CancellativeState(int n)
      : n_(n),
        covered_(static_cast<std::size_t>(n) + 1),
        forbidden_(static_cast<std::size_t>(n) + 1),
        nbr_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1)) {}

  bool can_add(const Set& e) const {
    Vertex v[3];
    int k = 0;
    e.for_each([&](Vertex x) { v[k++] = x; });
    for (int i = 0; i < 3; ++i) {
      Vertex a = v[i], b = v[(i + 1) % 3], w = v[(i + 2) % 3];
      if (forbidden_[ix(a)].contains(b)) return false;
      if (nbr(a, b).intersects(covered_[ix(w)])) return false;
    }
    return true;
  }

  void add(const Set& e) {
    Vertex v[3];
    int k = 0;
    e.for_each([&](Vertex x) { v[k++] = x; });
    for (int i = 0; i < 3; ++i) {
      Vertex a = v[i], b = v[(i + 1) % 3], w = v[(i + 2) % 3];
      covered_[ix(a)].insert(b);
      covered_[ix(b)].insert(a);
      nbr(a, b).for_each([&](Vertex u) {
        forbidden_[ix(w)].insert(u);
        forbidden_[ix(u)].insert(w);
      });
      nbr(a, b).insert(w);
      nbr(b, a).insert(w);
    }
  }

private:
  static std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }
  Set& nbr(Vertex a, Vertex b) { return nbr_[ix(a) * static_cast<std::size_t>(n_ + 1) + ix(b)]; }
  const Set& nbr(Vertex a, Vertex b) const { return nbr_[ix(a) * static_cast<std::size_t>(n_ + 1) + ix(b)]; }

  int n_;
  std::vector<Set> covered_;
  std::vector<Set> forbidden_;
  std::vector<Set> nbr_;
};

// Incremental K_{ell+1}-freeness of the pair-coverage graph (the auxiliary graph).
// For r = 2 and ell = 2 this is triangle-freeness.
template <std::size_t W>
class KFreeState {
public:
  using Set = BasicVertexSet<W>;

  KFreeState(int n, int ell) : ell_(ell), adj_(static_cast<std::size_t>(n) + 1) {}

  bool can_add(const Set& e) const {
    auto vs = e.members();
    std::vector<std::pair<Vertex, Vertex>> fresh;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!adj_[static_cast<std::size_t>(vs[i])].contains(vs[j])) fresh.emplace_back(vs[i], vs[j]);
    if (fresh.empty()) return true;
    auto adj = adj_;
    for (auto [a, b] : fresh) {
      adj[static_cast<std::size_t>(a)].insert(b);
      adj[static_cast<std::size_t>(b)].insert(a);
    }
    std::vector<Vertex> scratch;
    for (auto [a, b] : fresh) {
      auto common = adj[static_cast<std::size_t>(a)] & adj[static_cast<std::size_t>(b)];
      scratch.clear();
      if (detail::has_clique(adj, common, ell_ - 1, scratch)) return false;
    }
    return true;
  }

  void add(const Set& e) {
    auto vs = e.members();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        adj_[static_cast<std::size_t>(vs[i])].insert(vs[j]);
        adj_[static_cast<std::size_t>(vs[j])].insert(vs[i]);
      }
  }

private:
  int ell_;
  std::vector<Set> adj_;
};

// Fallback state for user predicates: re-evaluates the predicate on H + e.
template <std::size_t W>
class GenericState {
public:
  using Set = BasicVertexSet<W>;
  using Fn = std::function<bool(const BasicHypergraph<W>&)>;

  GenericState(int n, int r, std::shared_ptr<const Fn> fn) : h_(n, r), fn_(std::move(fn)) {}

  bool can_add(const Set& e) const {
    auto next = h_;
    next.add_edge(e);
    return (*fn_)(next);
  }
  void add(const Set& e) { h_.add_edge(e); }

private:
  BasicHypergraph<W> h_;
  std::shared_ptr<const Fn> fn_;
};

enum class PredicateKind { Cancellative, KFree, TriangleFree, Custom };

// Hereditary edge-set predicate driving the exhaustive search.
struct Predicate {
  PredicateKind kind = PredicateKind::Cancellative;
  int ell = 0;
  std::string custom_name;
  std::shared_ptr<const std::function<bool(const Hypergraph&)>> custom;

  static Predicate cancellative() { return {PredicateKind::Cancellative, 0, {}, nullptr}; }
  static Predicate k_free(int ell) { return {PredicateKind::KFree, ell, {}, nullptr}; }
  static Predicate triangle_free() { return {PredicateKind::TriangleFree, 2, {}, nullptr}; }

  // Only hereditary (edge-deletion closed) predicates may be registered.
  static Predicate custom_predicate(std::string name, std::function<bool(const Hypergraph&)> fn, bool hereditary) {
    if (!hereditary) throw PreconditionError("custom predicate '" + name + "' is not hereditary");
    return {PredicateKind::Custom, 0, std::move(name),
            std::make_shared<const std::function<bool(const Hypergraph&)>>(std::move(fn))};
  }

  std::string id() const {
    switch (kind) {
      case PredicateKind::Cancellative: return "cancellative";
      case PredicateKind::KFree: return "k-free(" + std::to_string(ell) + ")";
      case PredicateKind::TriangleFree: return "triangle-free";
      case PredicateKind::Custom: return "custom:" + custom_name;
    }
    return "unknown";
  }
};

// Parses "cancellative", "triangle-free", "k-free" (with ell) or "k-free(3)".
inline Predicate parse_predicate(const std::string& name, int ell) {
  if (name == "cancellative") return Predicate::cancellative();
  if (name == "triangle-free") return Predicate::triangle_free();
  if (name == "k-free" || name == "kfree") {
    if (ell < 2) throw PreconditionError("k-free predicate needs --ell >= 2");
    return Predicate::k_free(ell);
  }
  if (name.rfind("k-free(", 0) == 0 && name.back() == ')') return Predicate::k_free(std::stoi(name.substr(7)));
  throw PreconditionError("unknown predicate '" + name + "'");
}

}  // namespace turanlab
