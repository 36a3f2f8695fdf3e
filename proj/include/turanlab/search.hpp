#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "turanlab/canonical.hpp"
#include "turanlab/checkers.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/partition.hpp"
#include "turanlab/predicates.hpp"
#include "turanlab/rng.hpp"

namespace turanlab {

// Static candidate order for the edge search. Colex sorts r-sets by largest
// vertex first; DegreeGreedy is the lexicographic order, which fills the star
// of vertex 1, then vertex 2, and so on.
enum class Ordering { Colex, DegreeGreedy };

inline std::string ordering_name(Ordering o) { return o == Ordering::Colex ? "colex" : "degree-greedy"; }

struct SearchConfig {
  Ordering ordering = Ordering::Colex;
  int symmetry_depth = 3;
  int thread_count = 1;
  std::uint64_t node_budget = 4'000'000'000ULL;
  std::size_t witness_cap = 1000;
  bool enforce_size_guard = true;
};

struct ExtremalRecord {
  int n = 0;
  int r = 0;
  std::string predicate;
  bool complete = false;
  std::uint64_t value = 0;
  std::uint64_t extremal_classes = 0;
  bool witness_cap_hit = false;
  std::vector<Hypergraph> witnesses;  // canonical representatives, in canonical-code order
  std::uint64_t nodes_explored = 0;
  std::uint64_t initial_upper_bound = 0;
  double runtime_seconds = 0.0;
};

namespace detail {

inline std::vector<VertexSet> ordered_candidates(int n, int r, Ordering ordering) {
  auto c = all_subsets<1>(n, r);
  if (ordering == Ordering::DegreeGreedy)
    std::sort(c.begin(), c.end(), [](const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); });
  return c;
}

inline std::uint64_t pack_prefix(const std::vector<std::uint32_t>& idx) {
  std::uint64_t key = idx.size();
  for (auto i : idx) key = (key << 16) | i;
  return key;
}

// For each depth d <= max_depth, the index tuples that are lexicographically
// smallest within their isomorphism orbit. Any hypergraph is isomorphic to one
// whose every d-edge prefix is such a tuple, so other prefixes can be skipped.
inline std::unordered_set<std::uint64_t> orbit_minimal_prefixes(int n, int r, const std::vector<VertexSet>& cand,
                                                                int max_depth) {
  std::unordered_set<std::uint64_t> keep;
  const auto m = static_cast<std::uint32_t>(cand.size());
  for (int d = 1; d <= max_depth && d <= static_cast<int>(m); ++d) {
    std::map<CanonicalForm, std::vector<std::uint32_t>> best;
    std::vector<std::uint32_t> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
    while (true) {
      std::vector<VertexSet> es;
      for (auto i : idx) es.push_back(cand[i]);
      auto code = canonical_form(Hypergraph(n, r, es), 64);
      auto it = best.find(code);
      if (it == best.end())
        best.emplace(std::move(code), idx);  // first visit in lexicographic tuple order is the minimum
      int i = d - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - static_cast<std::uint32_t>(d - i)) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    for (auto& [code, tuple] : best) keep.insert(pack_prefix(tuple));
  }
  return keep;
}

template <class State>
class ThresholdSearch {
public:
  struct Node {
    State state;
    std::vector<std::uint32_t> chosen;
    std::vector<std::uint32_t> compatible;
  };

  ThresholdSearch(const std::vector<VertexSet>& cand, const std::unordered_set<std::uint64_t>& prefixes,
                  int symmetry_depth, std::uint64_t threshold, std::atomic<std::uint64_t>& budget_left,
                  std::atomic<bool>& aborted)
      : cand_(cand), prefixes_(prefixes), symmetry_depth_(symmetry_depth), threshold_(threshold),
        budget_left_(budget_left), aborted_(aborted) {}

  // Visits the subtree under `node`; nodes at `stop_depth` are handed to `defer` instead.
  template <class Defer>
  void explore(const Node& node, int stop_depth, Defer&& defer) {
    if (aborted_.load(std::memory_order_relaxed)) return;
    if (!take_budget()) return;
    ++nodes_;
    const auto depth = static_cast<int>(node.chosen.size());
    if (node.chosen.size() >= threshold_) record(node.chosen);
    if (depth == stop_depth) {
      defer(node);
      return;
    }
    const auto& comp = node.compatible;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (node.chosen.size() + (comp.size() - i) < threshold_) break;
      const auto c = comp[i];
      Node child{node.state, node.chosen, {}};
      child.chosen.push_back(c);
      if (static_cast<int>(child.chosen.size()) <= symmetry_depth_ && !prefixes_.contains(pack_prefix(child.chosen)))
        continue;
      child.state.add(cand_[c]);
      child.compatible.reserve(comp.size() - i - 1);
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (child.state.can_add(cand_[comp[j]])) child.compatible.push_back(comp[j]);
      explore(child, stop_depth, defer);
      if (aborted_.load(std::memory_order_relaxed)) return;
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::vector<std::uint32_t>>& solutions() { return solutions_; }

private:
  bool take_budget() {
    auto left = budget_left_.load(std::memory_order_relaxed);
    while (true) {
      if (left == 0) {
        aborted_.store(true);
        return false;
      }
      if (budget_left_.compare_exchange_weak(left, left - 1, std::memory_order_relaxed)) return true;
    }
  }

  void record(const std::vector<std::uint32_t>& chosen) {
    if (chosen.size() > best_size_) {
      best_size_ = chosen.size();
      solutions_.clear();
    }
    if (chosen.size() == best_size_) solutions_.push_back(chosen);
  }

  const std::vector<VertexSet>& cand_;
  const std::unordered_set<std::uint64_t>& prefixes_;
  int symmetry_depth_;
  std::uint64_t threshold_;
  std::atomic<std::uint64_t>& budget_left_;
  std::atomic<bool>& aborted_;
  std::uint64_t nodes_ = 0;
  std::size_t best_size_ = 0;
  std::vector<std::vector<std::uint32_t>> solutions_;
};

struct PhaseResult {
  bool complete = true;
  std::uint64_t nodes = 0;
  std::vector<std::vector<std::uint32_t>> solutions;  // all of the largest size found, size >= threshold
};

// One fixed-threshold pass: every orbit-minimal edge set of size >= threshold.
// The work split and merge order are fixed, so the outcome (including node
// counts) does not depend on the number of threads.
template <class State>
PhaseResult run_phase(const std::vector<VertexSet>& cand, const std::unordered_set<std::uint64_t>& prefixes,
                      const SearchConfig& config, std::uint64_t threshold, const State& empty_state,
                      std::atomic<std::uint64_t>& budget_left) {
  using Search = ThresholdSearch<State>;
  std::atomic<bool> aborted{false};
  typename Search::Node root{empty_state, {}, {}};
  for (std::uint32_t i = 0; i < cand.size(); ++i)
    if (root.state.can_add(cand[i])) root.compatible.push_back(i);

  constexpr int kSplitDepth = 2;
  Search front(cand, prefixes, config.symmetry_depth, threshold, budget_left, aborted);
  std::vector<typename Search::Node> tasks;
  front.explore(root, kSplitDepth, [&](const typename Search::Node& node) { tasks.push_back(node); });

  std::vector<PhaseResult> task_results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      auto t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      Search s(cand, prefixes, config.symmetry_depth, threshold, budget_left, aborted);
      // The deferred node itself was counted by the front search; explore its children only.
      auto node = tasks[t];
      s.explore(node, std::numeric_limits<int>::max(), [](const auto&) {});
      task_results[t].nodes = s.nodes() - 1;
      task_results[t].solutions = std::move(s.solutions());
    }
  };
  const int threads = std::max(1, config.thread_count);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  PhaseResult out;
  out.complete = !aborted.load();
  out.nodes = front.nodes();
  auto merge = [&](std::vector<std::vector<std::uint32_t>>& sols) {
    for (auto& s : sols) {
      if (!out.solutions.empty() && s.size() < out.solutions.front().size()) continue;
      if (!out.solutions.empty() && s.size() > out.solutions.front().size()) out.solutions.clear();
      out.solutions.push_back(std::move(s));
    }
  };
  merge(front.solutions());
  for (auto& tr : task_results) {
    out.nodes += tr.nodes;
    merge(tr.solutions);
  }
  return out;
}

}  // namespace detail

// Exact ex(n, predicate) over all r-graphs on [n], with the isomorphism classes
// attaining it. Passes run with a fixed threshold, descending from
// min(C(n, r), floor(n ex(n-1) / (n - r))); the first pass that finds any edge
// set of that size determines the value.
inline ExtremalRecord extremal_number(int n, int r, const Predicate& predicate, const SearchConfig& config = {}) {
  const auto started = std::chrono::steady_clock::now();
  if (r < 2) throw PreconditionError("uniformity must be at least 2");
  if (n < 0) throw PreconditionError("n must be non-negative");
  if (config.node_budget == 0) throw PreconditionError("node budget must be positive");
  if (config.symmetry_depth < 0 || config.symmetry_depth > 4) throw PreconditionError("symmetry depth must be 0..4");
  if (predicate.kind == PredicateKind::Cancellative && r != 3) throw PreconditionError("cancellative search needs r = 3");
  if (predicate.kind == PredicateKind::TriangleFree && r != 2)
    throw PreconditionError("triangle-free search needs r = 2");
  if (predicate.kind == PredicateKind::KFree && predicate.ell < r) throw PreconditionError("k-free search needs ell >= r");
  if (predicate.kind == PredicateKind::Custom && !predicate.custom) throw PreconditionError("custom predicate missing");
  if (config.enforce_size_guard && ((r == 2 && n > 10) || (r >= 3 && n > 8)))
    throw PreconditionError("n = " + std::to_string(n) + " beyond the search feasibility guard for r = " +
                            std::to_string(r));
  if (n > kDefaultCanonicalCeiling) throw PreconditionError("search limited to n <= canonical ceiling");

  ExtremalRecord rec;
  rec.n = n;
  rec.r = r;
  rec.predicate = predicate.id();

  std::uint64_t upper = detail::binomial(n, r);
  std::uint64_t nodes_before = 0;
  if (n > r) {
    auto smaller = extremal_number(n - 1, r, predicate, config);
    nodes_before = smaller.nodes_explored;
    if (!smaller.complete) {
      rec.nodes_explored = nodes_before;
      return rec;
    }
    upper = std::min(upper, static_cast<std::uint64_t>(n) * smaller.value / static_cast<std::uint64_t>(n - r));
  }
  rec.initial_upper_bound = upper;

  auto cand = detail::ordered_candidates(n, r, config.ordering);
  auto prefixes = detail::orbit_minimal_prefixes(n, r, cand, config.symmetry_depth);
  std::atomic<std::uint64_t> budget_left{config.node_budget > nodes_before ? config.node_budget - nodes_before : 0};

  auto run = [&](std::uint64_t threshold) {
    switch (predicate.kind) {
      case PredicateKind::Cancellative:
        return detail::run_phase(cand, prefixes, config, threshold, CancellativeState<1>(n), budget_left);
      case PredicateKind::KFree:
      case PredicateKind::TriangleFree:
        return detail::run_phase(cand, prefixes, config, threshold, KFreeState<1>(n, predicate.ell), budget_left);
      case PredicateKind::Custom:
        return detail::run_phase(cand, prefixes, config, threshold, GenericState<1>(n, r, predicate.custom),
                                 budget_left);
    }
    return detail::PhaseResult{};
  };

  std::uint64_t nodes = nodes_before;
  detail::PhaseResult found;
  for (std::uint64_t threshold = upper;; --threshold) {
    auto phase = run(threshold);
    nodes += phase.nodes;
    if (!phase.complete) {
      rec.nodes_explored = nodes;
      rec.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      return rec;
    }
    if (!phase.solutions.empty()) {
      found = std::move(phase);
      break;
    }
    if (threshold == 0) break;
  }

  std::map<CanonicalForm, Hypergraph> classes;
  for (const auto& s : found.solutions) {
    std::vector<VertexSet> es;
    for (auto i : s) es.push_back(cand[i]);
    Hypergraph h(n, r, std::move(es));
    auto code = canonical_form(h);
    if (classes.contains(code)) continue;
    if (classes.size() >= config.witness_cap) {
      rec.witness_cap_hit = true;
      continue;
    }
    classes.emplace(std::move(code), canonical_representative(h));
  }
  rec.complete = true;
  rec.value = found.solutions.empty() ? 0 : found.solutions.front().size();
  rec.extremal_classes = classes.size();
  for (auto& [code, h] : classes) rec.witnesses.push_back(std::move(h));
  rec.nodes_explored = nodes;
  rec.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rec;
}

// True iff the record has exactly one extremal class and it is isomorphic to target.
inline bool uniqueness_check(const ExtremalRecord& record, const Hypergraph& target) {
  if (!record.complete) throw PreconditionError("uniqueness check needs a complete search record");
  if (record.extremal_classes != 1 || record.witness_cap_hit || record.witnesses.size() != 1) return false;
  return isomorphic(record.witnesses.front(), target);
}

// ---------------------------------------------------------------------------
// Max ell-cut

enum class CutMode { Exact, Local };

inline constexpr int kExactCutLimit = 20;
inline constexpr int kLocalRestarts = 32;

template <std::size_t W>
struct CutResult {
  BasicPartition<W> partition;
  std::uint64_t crossing = 0;
  bool exact = false;
};

namespace detail {

template <std::size_t W>
std::uint64_t internal_edges(const std::vector<BasicVertexSet<W>>& adj, const std::vector<int>& block, int n) {
  std::uint64_t internal = 0;
  for (Vertex v = 1; v <= n; ++v)
    adj[static_cast<std::size_t>(v)].for_each([&](Vertex u) {
      if (u > v && block[static_cast<std::size_t>(u)] == block[static_cast<std::size_t>(v)]) ++internal;
    });
  return internal;
}

// Moves single vertices to a block holding strictly fewer of its neighbours
// until none can move; blocks that are nonempty stay nonempty.
template <std::size_t W>
void hill_climb(const std::vector<BasicVertexSet<W>>& adj, std::vector<int>& block, int n, int ell) {
  std::vector<std::vector<int>> count(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(ell), 0));
  for (Vertex v = 1; v <= n; ++v)
    adj[static_cast<std::size_t>(v)].for_each(
        [&](Vertex u) { ++count[static_cast<std::size_t>(v)][static_cast<std::size_t>(block[static_cast<std::size_t>(u)])]; });
  bool moved = true;
  while (moved) {
    moved = false;
    for (Vertex v = 1; v <= n; ++v) {
      auto& cv = count[static_cast<std::size_t>(v)];
      int cur = block[static_cast<std::size_t>(v)];
      int best = cur;
      for (int b = 0; b < ell; ++b)
        if (cv[static_cast<std::size_t>(b)] < cv[static_cast<std::size_t>(best)]) best = b;
      if (best == cur) continue;
      block[static_cast<std::size_t>(v)] = best;
      adj[static_cast<std::size_t>(v)].for_each([&](Vertex u) {
        --count[static_cast<std::size_t>(u)][static_cast<std::size_t>(cur)];
        ++count[static_cast<std::size_t>(u)][static_cast<std::size_t>(best)];
      });
      moved = true;
    }
  }
}

// Fills empty blocks (when n >= ell) by moving a vertex with the most neighbours
// in its own block out of a block of size >= 2; the cut never decreases.
template <std::size_t W>
void fill_empty_blocks(const std::vector<BasicVertexSet<W>>& adj, std::vector<int>& block, int n, int ell) {
  while (true) {
    std::vector<int> size(static_cast<std::size_t>(ell), 0);
    for (Vertex v = 1; v <= n; ++v) ++size[static_cast<std::size_t>(block[static_cast<std::size_t>(v)])];
    int empty = -1;
    for (int b = 0; b < ell; ++b)
      if (size[static_cast<std::size_t>(b)] == 0) {
        empty = b;
        break;
      }
    if (empty < 0) return;
    Vertex pick = 0;
    int most = -1;
    for (Vertex v = 1; v <= n; ++v) {
      int b = block[static_cast<std::size_t>(v)];
      if (size[static_cast<std::size_t>(b)] < 2) continue;
      int own = 0;
      adj[static_cast<std::size_t>(v)].for_each([&](Vertex u) { own += block[static_cast<std::size_t>(u)] == b; });
      if (own > most) {
        most = own;
        pick = v;
      }
    }
    if (pick == 0) return;
    block[static_cast<std::size_t>(pick)] = empty;
  }
}

// Each vertex in label order joins the block where it has the fewest placed
// neighbours (lowest index on ties).
template <std::size_t W>
std::vector<int> greedy_blocks(const std::vector<BasicVertexSet<W>>& adj, int n, int ell) {
  std::vector<int> block(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    std::vector<int> c(static_cast<std::size_t>(ell), 0);
    adj[static_cast<std::size_t>(v)].for_each([&](Vertex u) {
      if (u < v) ++c[static_cast<std::size_t>(block[static_cast<std::size_t>(u)])];
    });
    block[static_cast<std::size_t>(v)] =
        static_cast<int>(std::min_element(c.begin(), c.end()) - c.begin());
  }
  return block;
}

template <std::size_t W>
std::vector<int> local_cut(const std::vector<BasicVertexSet<W>>& adj, int n, int ell, std::uint64_t seed, int restarts) {
  std::vector<int> best;
  std::uint64_t best_internal = std::numeric_limits<std::uint64_t>::max();
  for (int rs = 0; rs < std::max(1, restarts); ++rs) {
    std::vector<int> block;
    if (rs == 0) {
      block = greedy_blocks(adj, n, ell);
    } else {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(rs)));
      block.assign(static_cast<std::size_t>(n) + 1, 0);
      for (Vertex v = 1; v <= n; ++v)
        block[static_cast<std::size_t>(v)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(ell)));
    }
    hill_climb(adj, block, n, ell);
    fill_empty_blocks(adj, block, n, ell);
    hill_climb(adj, block, n, ell);
    auto internal = internal_edges(adj, block, n);
    if (internal < best_internal) {
      best_internal = internal;
      best = std::move(block);
    }
  }
  return best;
}

// Branch and bound on block assignments minimizing internal edges. Vertices
// are placed in decreasing degree order; a vertex may open at most one new
// block, which removes block-permutation symmetry.
template <std::size_t W>
class ExactCut {
public:
  ExactCut(const std::vector<BasicVertexSet<W>>& adj, int n, int ell, std::vector<int> incumbent)
      : adj_(adj), n_(n), ell_(ell), best_block_(std::move(incumbent)) {
    best_internal_ = internal_edges(adj_, best_block_, n_);
    for (Vertex v = 1; v <= n; ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return adj_[static_cast<std::size_t>(a)].size() > adj_[static_cast<std::size_t>(b)].size();
    });
    block_.assign(static_cast<std::size_t>(n) + 1, -1);
    count_.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(ell), 0));
  }

  std::vector<int> run() {
    if (n_ > 0 && best_internal_ > 0) place(0, 0, 0);
    return best_block_;
  }

private:
  void place(std::size_t pos, std::uint64_t internal, int used) {
    if (pos == order_.size()) {
      if (internal < best_internal_) {
        best_internal_ = internal;
        best_block_ = block_;
      }
      return;
    }
    std::uint64_t bound = internal;
    for (std::size_t i = pos; i < order_.size(); ++i) {
      const auto& c = count_[static_cast<std::size_t>(order_[i])];
      bound += static_cast<std::uint64_t>(*std::min_element(c.begin(), c.end()));
    }
    if (bound >= best_internal_) return;
    Vertex v = order_[pos];
    const int limit = std::min(used + 1, ell_);
    for (int b = 0; b < limit; ++b) {
      auto add = static_cast<std::uint64_t>(count_[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)]);
      if (internal + add >= best_internal_) continue;
      block_[static_cast<std::size_t>(v)] = b;
      adj_[static_cast<std::size_t>(v)].for_each(
          [&](Vertex u) { ++count_[static_cast<std::size_t>(u)][static_cast<std::size_t>(b)]; });
      place(pos + 1, internal + add, std::max(used, b + 1));
      adj_[static_cast<std::size_t>(v)].for_each(
          [&](Vertex u) { --count_[static_cast<std::size_t>(u)][static_cast<std::size_t>(b)]; });
      block_[static_cast<std::size_t>(v)] = -1;
      if (best_internal_ == 0) return;
    }
  }

  const std::vector<BasicVertexSet<W>>& adj_;
  int n_, ell_;
  std::vector<Vertex> order_;
  std::vector<int> block_;
  std::vector<std::vector<int>> count_;
  std::vector<int> best_block_;
  std::uint64_t best_internal_;
};

template <std::size_t W>
BasicPartition<W> blocks_to_partition(const std::vector<int>& block, int n, int ell) {
  BasicPartition<W> p;
  p.blocks.assign(static_cast<std::size_t>(ell), {});
  for (Vertex v = 1; v <= n; ++v) p.blocks[static_cast<std::size_t>(block[static_cast<std::size_t>(v)])].insert(v);
  return p;
}

}  // namespace detail

// Maximum ell-cut of a graph. Exact mode is branch and bound (n <= 20); local
// mode returns the best of `restarts` hill-climbing runs (first run greedy,
// others seeded-random), each of which no single vertex move improves.
template <std::size_t W>
CutResult<W> max_ell_cut(const BasicHypergraph<W>& g, int ell, CutMode mode, std::uint64_t seed,
                         int restarts = kLocalRestarts) {
  if (g.r() != 2) throw PreconditionError("max_ell_cut needs a graph (r = 2)");
  if (ell < 2) throw PreconditionError("max_ell_cut needs ell >= 2");
  if (mode == CutMode::Exact && g.n() > kExactCutLimit)
    throw PreconditionError("exact max cut limited to n <= " + std::to_string(kExactCutLimit));
  const int n = g.n();
  auto adj = adjacency(g);
  auto block = detail::local_cut(adj, n, ell, seed, restarts);
  if (mode == CutMode::Exact) {
    block = detail::ExactCut<W>(adj, n, ell, block).run();
    detail::fill_empty_blocks(adj, block, n, ell);
  }
  CutResult<W> out;
  out.partition = detail::blocks_to_partition<W>(block, n, ell);
  out.crossing = g.size() - detail::internal_edges(adj, block, n);
  out.exact = mode == CutMode::Exact;
  return out;
}

// True iff no vertex has more neighbours in its own block than in some other block.
template <std::size_t W>
bool is_vertex_move_optimal(const BasicHypergraph<W>& g, const BasicPartition<W>& p) {
  auto adj = adjacency(g);
  for (Vertex v = 1; v <= g.n(); ++v) {
    int own = p.block_of(v);
    int own_count = (adj[static_cast<std::size_t>(v)] & p.blocks[static_cast<std::size_t>(own)]).size();
    for (const auto& b : p.blocks)
      if ((adj[static_cast<std::size_t>(v)] & b).size() < own_count) return false;
  }
  return true;
}

}  // namespace turanlab
