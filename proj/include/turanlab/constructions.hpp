#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "turanlab/canonical.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/partition.hpp"
#include "turanlab/predicates.hpp"
#include "turanlab/rng.hpp"

namespace turanlab {

namespace detail {

inline void check_turan_params(int n, int r, int ell) {
  if (r < 2) throw PreconditionError("uniformity r must be at least 2");
  if (ell < r)
    throw PreconditionError("need ell >= r (ell = " + std::to_string(ell) + ", r = " + std::to_string(r) + ")");
  if (n < 1) throw PreconditionError("need n >= 1");
}

// Visits every k-subset of [n] in colex order.
template <std::size_t W, class F>
void for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<Vertex> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    BasicVertexSet<W> s;
    for (auto v : idx) s.insert(v);
    f(s);
    int i = 0;
    while (i < k && (i + 1 == k ? idx[static_cast<std::size_t>(i)] == n
                                : idx[static_cast<std::size_t>(i)] + 1 == idx[static_cast<std::size_t>(i + 1)]))
      ++i;
    if (i == k) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) idx[static_cast<std::size_t>(j)] = j + 1;
  }
}

}  // namespace detail

// All k-subsets of [n], colex order.
template <std::size_t W = 1>
std::vector<BasicVertexSet<W>> all_subsets(int n, int k) {
  std::vector<BasicVertexSet<W>> out;
  detail::for_each_subset<W>(n, k, [&](const BasicVertexSet<W>& s) { out.push_back(s); });
  return out;
}

// Balanced partition of [n] into ell blocks of consecutive labels, larger blocks first.
template <std::size_t W = 1>
BasicPartition<W> balanced_partition(int n, int ell) {
  if (ell < 1) throw PreconditionError("need at least one block");
  BasicPartition<W> p;
  Vertex next = 1;
  for (int i = 0; i < ell; ++i) {
    int size = n / ell + (i < n % ell ? 1 : 0);
    p.blocks.push_back(size > 0 ? BasicVertexSet<W>::range(next, next + size - 1) : BasicVertexSet<W>{});
    next += size;
  }
  return p;
}

// t_r(n, ell): elementary symmetric polynomial e_r of the balanced part sizes.
inline std::uint64_t turan_count(int n, int r, int ell) {
  detail::check_turan_params(n, r, ell);
  std::vector<std::uint64_t> e(static_cast<std::size_t>(r) + 1, 0);
  e[0] = 1;
  for (int i = 0; i < ell; ++i) {
    auto size = static_cast<std::uint64_t>(n / ell + (i < n % ell ? 1 : 0));
    for (int j = r; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * size;
  }
  return e[static_cast<std::size_t>(r)];
}

// T_r(n, ell): every r-set meeting each block of the balanced partition at most once.
template <std::size_t W = 1>
BasicHypergraph<W> turan_hypergraph(int n, int r, int ell) {
  detail::check_turan_params(n, r, ell);
  auto part = balanced_partition<W>(n, ell);
  std::vector<BasicVertexSet<W>> edges;
  std::function<void(int, BasicVertexSet<W>, int)> rec = [&](int block, BasicVertexSet<W> cur, int left) {
    if (left == 0) {
      edges.push_back(cur);
      return;
    }
    if (ell - block < left) return;
    for (int b = block; b < ell; ++b)
      part.blocks[static_cast<std::size_t>(b)].for_each([&](Vertex v) {
        auto next = cur;
        next.insert(v);
        rec(b + 1, next, left - 1);
      });
  };
  rec(0, {}, r);
  return BasicHypergraph<W>(n, r, std::move(edges));
}

// Complete balanced ell-partite graph T_2(n, ell).
template <std::size_t W = 1>
BasicHypergraph<W> turan_graph(int n, int ell) {
  return turan_hypergraph<W>(n, 2, ell);
}

template <std::size_t W = 1>
struct BasicForbiddenFamily {
  std::string name;
  std::vector<BasicHypergraph<W>> members;
};

using ForbiddenFamily = BasicForbiddenFamily<1>;

inline constexpr std::uint64_t kKFamilyNodeBudget = 50'000'000;

// Minimal members of K^{(r)}_{ell+1}: r-graphs whose edges each cover at least one
// pair of the core set S = {1..ell+1}, covering every pair of S, with no edge
// removable. Members use at most `vertex_cap` vertices (a host with fewer vertices
// cannot contain a larger member); isomorphic copies are merged and members are
// emitted in canonical-code order.
inline ForbiddenFamily k_family(int r, int ell, int vertex_cap = -1) {
  // ell + 1 = r is allowed: a single edge then covers the core
  if (r < 2 || ell < 1 || ell + 1 < r) throw PreconditionError("k_family needs r >= 2 and ell + 1 >= r");
  if (ell > 4 || r > 4) throw PreconditionError("k_family enumeration guarded to ell <= 4, r <= 4");
  const int core = ell + 1;
  const int full = core + (core * (core - 1) / 2) * (r - 2);
  if (vertex_cap < 0) vertex_cap = std::min(full, kDefaultCanonicalCeiling);
  vertex_cap = std::min(vertex_cap, full);
  if (vertex_cap > kDefaultCanonicalCeiling) throw PreconditionError("k_family vertex cap above canonical ceiling");
  if (vertex_cap < core) return ForbiddenFamily{"K^(" + std::to_string(r) + ")_" + std::to_string(core), {}};

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 1; a <= core; ++a)
    for (Vertex b = a + 1; b <= core; ++b) pairs.emplace_back(a, b);

  std::set<CanonicalForm> seen;
  std::vector<std::pair<CanonicalForm, Hypergraph>> found;
  std::vector<VertexSet> chosen;
  std::uint64_t nodes = 0;

  auto covers = [&](const VertexSet& e, std::size_t pi) {
    return e.contains(pairs[pi].first) && e.contains(pairs[pi].second);
  };
  auto is_minimal = [&]() {
    for (std::size_t drop = 0; drop < chosen.size(); ++drop)
      for (std::size_t pi = 0;; ++pi) {
        if (pi == pairs.size()) return false;  // every pair still covered without `drop`
        bool other = false;
        for (std::size_t j = 0; j < chosen.size() && !other; ++j)
          if (j != drop && covers(chosen[j], pi)) other = true;
        if (!other) break;
      }
    return true;
  };

  // Extra vertices are introduced in increasing label order to avoid relabeled duplicates.
  std::function<void(Vertex)> rec = [&](Vertex used_extra) {
    if (++nodes > kKFamilyNodeBudget) throw PreconditionError("k_family enumeration budget exhausted");
    std::size_t target = pairs.size();
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      bool c = false;
      for (const auto& e : chosen)
        if (covers(e, pi)) {
          c = true;
          break;
        }
      if (!c) {
        target = pi;
        break;
      }
    }
    if (target == pairs.size()) {
      if (!is_minimal()) return;
      int nv = std::max(core, static_cast<int>(used_extra));
      Hypergraph f(nv, r, chosen);
      auto code = canonical_form(f);
      if (seen.insert(code).second) found.emplace_back(code, canonical_representative(f));
      return;
    }
    auto [a, b] = pairs[target];
    // Fill the remaining r - 2 slots from core vertices, existing extras, or fresh extras.
    std::vector<Vertex> pool;
    for (Vertex v = 1; v <= core; ++v)
      if (v != a && v != b) pool.push_back(v);
    const Vertex first_fresh = std::max(core, static_cast<int>(used_extra)) + 1;
    for (Vertex v = core + 1; v < first_fresh; ++v) pool.push_back(v);
    for (Vertex v = first_fresh; v <= vertex_cap && v < first_fresh + (r - 2); ++v) pool.push_back(v);
    const int slots = r - 2;
    std::vector<Vertex> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
      if (static_cast<int>(pick.size()) == slots) {
        VertexSet e{a, b};
        Vertex max_extra = std::max(core, static_cast<int>(used_extra));
        for (auto v : pick) {
          e.insert(v);
          max_extra = std::max(max_extra, v);
        }
        // fresh extras must be consumed contiguously
        for (Vertex v = first_fresh; v <= max_extra; ++v)
          if (!e.contains(v)) return;
        if (std::find(chosen.begin(), chosen.end(), e) != chosen.end()) return;
        chosen.push_back(e);
        rec(max_extra);
        chosen.pop_back();
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        pick.push_back(pool[i]);
        choose(i + 1);
        pick.pop_back();
      }
    };
    choose(0);
  };
  rec(static_cast<Vertex>(core));

  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  ForbiddenFamily fam{"K^(" + std::to_string(r) + ")_" + std::to_string(core), {}};
  for (auto& [code, h] : found) fam.members.push_back(std::move(h));
  return fam;
}

// Deletes floor(fraction * |H|) uniformly chosen edges, then adds `add_count`
// uniformly chosen absent r-sets. With keep_cancellative, candidate additions
// that would break cancellativity are skipped.
template <std::size_t W>
BasicHypergraph<W> perturb(const BasicHypergraph<W>& h, double delete_fraction, int add_count, std::uint64_t seed,
                           bool keep_cancellative = false) {
  if (!(delete_fraction >= 0.0 && delete_fraction <= 1.0))
    throw PreconditionError("delete fraction must lie in [0, 1]");
  if (add_count < 0) throw PreconditionError("add count must be non-negative");
  if (keep_cancellative && h.r() != 3) throw PreconditionError("cancellative additions need r = 3");
  Rng rng(seed);
  auto edges = h.edges();
  const auto to_delete = static_cast<std::size_t>(
      std::floor(delete_fraction * static_cast<double>(edges.size()) + 1e-9));
  for (std::size_t i = 0; i < to_delete; ++i) {
    auto j = i + static_cast<std::size_t>(rng.below(edges.size() - i));
    std::swap(edges[i], edges[j]);
  }
  BasicHypergraph<W> out(h.n(), h.r(),
                         std::vector<BasicVertexSet<W>>(edges.begin() + static_cast<std::ptrdiff_t>(to_delete),
                                                        edges.end()));
  if (add_count == 0) return out;

  std::vector<BasicVertexSet<W>> absent;
  detail::for_each_subset<W>(h.n(), h.r(), [&](const BasicVertexSet<W>& s) {
    if (!out.contains(s)) absent.push_back(s);
  });
  rng.shuffle(absent);
  CancellativeState<W> state(h.n());
  if (keep_cancellative)
    for (const auto& e : out.edges()) state.add(e);
  int added = 0;
  for (const auto& s : absent) {
    if (added == add_count) break;
    if (keep_cancellative) {
      if (!state.can_add(s)) continue;
      state.add(s);
    }
    out.add_edge(s);
    ++added;
  }
  return out;
}

// Greedy cancellative 3-graph: insert all triples in a seeded random order,
// keeping each one that preserves cancellativity. The result is maximal.
template <std::size_t W = 1>
BasicHypergraph<W> random_maximal_cancellative(int n, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("need n >= 0");
  Rng rng(seed);
  auto triples = all_subsets<W>(n, 3);
  rng.shuffle(triples);
  CancellativeState<W> state(n);
  BasicHypergraph<W> h(n, 3);
  for (const auto& t : triples)
    if (state.can_add(t)) {
      state.add(t);
      h.add_edge(t);
    }
  return h;
}

// Triangle-free graph with exactly floor((1/4 - epsilon) n^2) edges, built from
// K_{ceil(n/2), floor(n/2)}. A share `noise` of the removal budget is spent on
// inserting internal edges (clearing their common neighbourhood first); the rest
// removes random cross edges.
template <std::size_t W = 1>
BasicHypergraph<W> random_triangle_free_near_bipartite(int n, double epsilon, double noise, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("need n >= 1");
  if (!(noise >= 0.0 && noise <= 1.0)) throw PreconditionError("noise must lie in [0, 1]");
  const long long base = static_cast<long long>((n + 1) / 2) * (n / 2);
  const double raw = (0.25 - epsilon) * static_cast<double>(n) * static_cast<double>(n);
  const long long target = static_cast<long long>(std::floor(raw + 1e-9));
  if (target > base || target < 0 || epsilon > 0.25)
    throw PreconditionError("target edge count infeasible for epsilon = " + std::to_string(epsilon));

  Rng rng(seed);
  const int left = (n + 1) / 2;
  std::vector<BasicVertexSet<W>> adj(static_cast<std::size_t>(n) + 1);
  auto connect = [&](Vertex a, Vertex b) {
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  };
  auto disconnect = [&](Vertex a, Vertex b) {
    adj[static_cast<std::size_t>(a)].erase(b);
    adj[static_cast<std::size_t>(b)].erase(a);
  };
  long long edges = 0;
  for (Vertex a = 1; a <= left; ++a)
    for (Vertex b = left + 1; b <= n; ++b) {
      connect(a, b);
      ++edges;
    }

  long long internal_budget = static_cast<long long>(std::floor(noise * static_cast<double>(base - target)));
  for (int attempt = 0; attempt < 8 * n && internal_budget > 0; ++attempt) {
    bool first_side = rng.coin();
    int lo = first_side ? 1 : left + 1;
    int hi = first_side ? left : n;
    if (hi - lo < 1) continue;
    Vertex a = lo + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    Vertex b = lo + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    if (a == b || adj[static_cast<std::size_t>(a)].contains(b)) continue;
    auto common = adj[static_cast<std::size_t>(a)] & adj[static_cast<std::size_t>(b)];
    long long cost = common.size() - 1;
    if (cost > internal_budget || cost < 0) continue;
    common.for_each([&](Vertex c) {
      if (rng.coin())
        disconnect(a, c);
      else
        disconnect(b, c);
    });
    connect(a, b);
    edges += 1 - common.size();
    internal_budget -= cost;
  }

  // Remove random cross edges (any edges if cross edges run out) down to the target.
  while (edges > target) {
    std::vector<std::pair<Vertex, Vertex>> cross, any;
    for (Vertex a = 1; a <= n; ++a)
      adj[static_cast<std::size_t>(a)].for_each([&](Vertex b) {
        if (b <= a) return;
        any.emplace_back(a, b);
        if ((a <= left) != (b <= left)) cross.emplace_back(a, b);
      });
    auto& pool = cross.empty() ? any : cross;
    auto pick = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    disconnect(pick.first, pick.second);
    --edges;
  }

  BasicHypergraph<W> g(n, 2);
  for (Vertex a = 1; a <= n; ++a)
    adj[static_cast<std::size_t>(a)].for_each([&](Vertex b) {
      if (b > a) g.add_edge(BasicVertexSet<W>{a, b});
    });
  return g;
}

}  // namespace turanlab
