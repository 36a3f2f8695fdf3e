#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "turanlab/checkers.hpp"
#include "turanlab/cliques.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/partition.hpp"
#include "turanlab/search.hpp"

namespace turanlab {

// Choices made by the cancellative extractor: shadow pair T, ordered pair
// (u, v) in N(T)^2, and the edge {x, y} of the link graph L(u, v).
template <std::size_t W>
struct WitnessChain {
  BasicVertexSet<W> t;
  int degree_t = 0;
  OrderedPair pair;
  Vertex x = 0;
  Vertex y = 0;
  long long link_size = 0;
  Rational score;        // sum_{N(T)^2} |L| / (d^2 ((n-d)/2)^2)
  Rational pair_ratio;   // |L(u,v)| / ((n-d)/2)^2
  BasicVertexSet<W> n_t;
  BasicVertexSet<W> v2;
  BasicVertexSet<W> v3;
};

struct InvariantCheck {
  std::string name;
  bool holds = true;
};

template <std::size_t W>
struct BasicStabilityReport {
  std::string method;
  int n = 0;
  int r = 0;
  int ell = 0;
  std::uint64_t edges = 0;
  std::uint64_t target = 0;   // t_r(n, ell), or the K_r-count target for the generalized pipeline
  Rational epsilon;           // 1 - measured / target
  std::uint64_t bad_edges = 0;
  int delta_exponent = 0;     // delta = bad_edges / n^delta_exponent
  Rational delta;
  BasicPartition<W> partition;
  std::optional<WitnessChain<W>> witness_chain;
  bool degenerate = false;
  bool exact_cut = false;
  std::uint64_t crossing = 0;
  std::uint64_t removed_edges = 0;
  std::uint64_t clique_count = 0;
  std::vector<InvariantCheck> invariants;

  bool invariants_hold() const {
    return std::all_of(invariants.begin(), invariants.end(), [](const auto& c) { return c.holds; });
  }
};

using StabilityReport = BasicStabilityReport<1>;

namespace detail {

inline Rational pow_rational(long long base, int exp) {
  Rational r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

template <std::size_t W>
bool is_independent(const BasicHypergraph<W>& h, const BasicVertexSet<W>& s) {
  return std::none_of(h.edges().begin(), h.edges().end(), [&](const auto& e) { return (e & s).size() >= 2; });
}

template <std::size_t W>
void finish_report(BasicStabilityReport<W>& rep, const BasicHypergraph<W>& host) {
  rep.bad_edges = count_bad_edges(host, rep.partition);
  rep.delta = Rational(static_cast<long long>(rep.bad_edges)) / pow_rational(host.n(), rep.delta_exponent);
  rep.invariants.push_back({"partition covers [n] disjointly", is_partition_of(rep.partition, host.n())});
  rep.invariants.push_back({"bad-edge recount matches", count_bad_edges(host, rep.partition) == rep.bad_edges});
}

inline CutMode cut_mode_for(int n) { return n <= kExactCutLimit ? CutMode::Exact : CutMode::Local; }

}  // namespace detail

inline long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Partition of a K^{(r)}_{ell+1}-free r-graph from a maximum ell-cut of its
// auxiliary graph (exact for n <= 20, local search above).
template <std::size_t W>
BasicStabilityReport<W> extract_partition_kfree(const BasicHypergraph<W>& h, int ell, std::uint64_t seed = 0) {
  if (ell < h.r()) throw PreconditionError("k-free extraction needs ell >= r");
  auto g = auxiliary_graph(h);
  if (contains_clique(g, ell + 1))
    throw PreconditionError("input is not K^(" + std::to_string(h.r()) + ")_" + std::to_string(ell + 1) + "-free");
  BasicStabilityReport<W> rep;
  rep.method = "kfree";
  rep.n = h.n();
  rep.r = h.r();
  rep.ell = ell;
  rep.edges = h.size();
  rep.target = turan_count(h.n(), h.r(), ell);
  rep.epsilon = 1 - Rational(static_cast<long long>(rep.edges), static_cast<long long>(rep.target));
  auto cut = max_ell_cut(g, ell, detail::cut_mode_for(h.n()), seed);
  rep.partition = cut.partition;
  rep.exact_cut = cut.exact;
  rep.crossing = cut.crossing;
  rep.delta_exponent = h.r();
  detail::finish_report(rep, h);
  rep.invariants.push_back({"cut is vertex-move optimal", is_vertex_move_optimal(g, rep.partition)});
  return rep;
}

// Tripartition of a cancellative 3-graph:
//  (i)   T in the shadow maximizing sum_{(u,v) in N(T)^2} |L(u,v)| / (d(T)^2 ((n-d(T))/2)^2),
//        ties by larger d(T), then smaller T;
//  (ii)  (u, v) in N(T)^2 maximizing |L(u, v)|, ties by smaller (u, v);
//  (iii) edge {x, y} of L = L(u, v) maximizing d_L(x) + d_L(y), ties by smaller (x, y);
//  (iv)  V2 = N_L(x), V3 = N_L(y), V1 = the rest.
// `degenerate` marks links with at most one edge (then L(u, v) = {T}).
template <std::size_t W>
BasicStabilityReport<W> extract_partition_cancellative(const BasicHypergraph<W>& h) {
  detail::require_cancellative_nonempty(h, "cancellative extraction");
  const int n = h.n();
  auto lk = link_adjacency(h);
  auto sizes = detail::pair_link_sizes(h);
  auto sh = shadow(h);

  using U128 = boost::multiprecision::uint128_t;
  const BasicVertexSet<W>* best_t = nullptr;
  std::uint64_t best_sum = 0;
  int best_d = 0;
  for (const auto& t : sh) {
    auto nt = lk[t.first()][t.last()];
    const int d = nt.size();
    std::uint64_t sum = 0;
    nt.for_each([&](Vertex u) { nt.for_each([&](Vertex v) { sum += static_cast<std::uint64_t>(sizes[u][v]); }); });
    bool better = false;
    if (!best_t) {
      better = true;
    } else {
      // compare sum/(d^2 (n-d)^2) exactly
      auto lhs = U128(sum) * U128(best_d) * U128(best_d) * U128(n - best_d) * U128(n - best_d);
      auto rhs = U128(best_sum) * U128(d) * U128(d) * U128(n - d) * U128(n - d);
      better = lhs > rhs || (lhs == rhs && d > best_d) ||
               (lhs == rhs && d == best_d && std::pair(t.first(), t.last()) < std::pair(best_t->first(), best_t->last()));
    }
    if (better) {
      best_t = &t;
      best_sum = sum;
      best_d = d;
    }
  }
  const auto t = *best_t;
  const auto nt = lk[t.first()][t.last()];
  const long long room = n - best_d;

  OrderedPair pick{0, 0};
  int best_link = -1;
  nt.for_each([&](Vertex u) {
    nt.for_each([&](Vertex v) {
      if (sizes[u][v] > best_link) {
        best_link = sizes[u][v];
        pick = {u, v};
      }
    });
  });

  std::vector<BasicVertexSet<W>> ladj(static_cast<std::size_t>(n) + 1);
  BasicVertexSet<W> support;
  for (Vertex a = 1; a <= n; ++a) {
    ladj[a] = lk[pick.first][a] & lk[pick.second][a];
    if (!ladj[a].empty()) support.insert(a);
  }
  Vertex x = 0, y = 0;
  int best_deg = -1;
  for (Vertex a = 1; a <= n; ++a)
    ladj[a].for_each([&](Vertex b) {
      if (b <= a) return;
      int s = ladj[a].size() + ladj[b].size();
      if (s > best_deg) {
        best_deg = s;
        x = a;
        y = b;
      }
    });

  BasicStabilityReport<W> rep;
  rep.method = "cancellative";
  rep.n = n;
  rep.r = 3;
  rep.ell = 3;
  rep.edges = h.size();
  rep.target = turan_count(std::max(n, 3), 3, 3);
  rep.epsilon = 1 - Rational(static_cast<long long>(rep.edges), static_cast<long long>(rep.target));
  rep.delta_exponent = 3;

  WitnessChain<W> chain;
  chain.t = t;
  chain.degree_t = best_d;
  chain.pair = pick;
  chain.link_size = best_link;
  chain.n_t = nt;
  chain.score = Rational(4 * static_cast<long long>(best_sum), static_cast<long long>(best_d) * best_d * room * room);
  chain.pair_ratio = Rational(4LL * best_link, room * room);
  BasicVertexSet<W> v2, v3;
  if (x == 0) {
    v2 = support;  // edgeless link: unreachable for valid input since T lies in L(u, v)
  } else {
    v2 = ladj[x];
    v3 = ladj[y];
  }
  chain.x = x;
  chain.y = y;
  chain.v2 = v2;
  chain.v3 = v3;
  rep.degenerate = best_link <= 1;
  auto v1 = h.vertices() - v2 - v3;
  rep.partition.blocks = {v1, v2, v3};
  rep.witness_chain = chain;

  detail::finish_report(rep, h);
  rep.invariants.push_back({"V2 and V3 disjoint", !v2.intersects(v3)});
  rep.invariants.push_back({"V2 independent in H", detail::is_independent(h, v2)});
  rep.invariants.push_back({"V3 independent in H", detail::is_independent(h, v3)});
  rep.invariants.push_back({"V(L(u,v)) misses N(T)", !support.intersects(nt)});
  return rep;
}

template <std::size_t W>
struct MaxDegreeSumEdge {
  Vertex x = 0;
  Vertex y = 0;
  BasicVertexSet<W> nx;
  BasicVertexSet<W> ny;
  int degree_sum = 0;
  std::uint64_t edges = 0;
  bool disjoint = false;
  bool averaging_bound = false;  // n (d(x) + d(y)) >= 4 |E|
};

// Edge {x, y} of a triangle-free graph maximizing d(x) + d(y) (ties: smallest pair).
template <std::size_t W>
MaxDegreeSumEdge<W> max_degree_sum_edge(const BasicHypergraph<W>& g) {
  if (g.r() != 2) throw PreconditionError("max_degree_sum_edge needs a graph");
  if (g.empty()) throw PreconditionError("max_degree_sum_edge needs at least one edge");
  if (contains_clique(g, 3)) throw PreconditionError("max_degree_sum_edge needs a triangle-free graph");
  auto adj = adjacency(g);
  MaxDegreeSumEdge<W> out;
  int best = -1;
  for (const auto& e : g.edges()) {
    Vertex a = e.first(), b = e.last();
    int s = adj[a].size() + adj[b].size();
    if (s > best || (s == best && std::pair(a, b) < std::pair(out.x, out.y))) {
      best = s;
      out.x = a;
      out.y = b;
    }
  }
  out.nx = adj[out.x];
  out.ny = adj[out.y];
  out.degree_sum = best;
  out.edges = g.size();
  out.disjoint = !out.nx.intersects(out.ny);
  out.averaging_bound = static_cast<std::uint64_t>(g.n()) * static_cast<std::uint64_t>(best) >= 4 * g.size();
  if (!out.disjoint || !out.averaging_bound)
    throw std::logic_error("max_degree_sum_edge postcondition failed at edge {" + std::to_string(out.x) + "," +
                           std::to_string(out.y) + "}");
  return out;
}

namespace detail {

template <std::size_t W>
std::uint64_t cliques_through_edge(const std::vector<BasicVertexSet<W>>& adj, Vertex a, Vertex b, int size) {
  if (size < 2) return 0;
  auto common = adj[a] & adj[b];
  if (size == 2) return 1;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(common.size()) + 2, 0);
  if (common.empty()) return 0;
  // cliques inside `common`, via the same pivot recursion as clique_counts
  common.for_each([&](Vertex v) {
    auto later = common & adj[v];
    for (Vertex u = 1; u <= v; ++u) later.erase(u);
    pivot_count(adj, later, 1, 0, counts);
  });
  const auto need = static_cast<std::size_t>(size - 2);
  return need < counts.size() ? counts[need] : 0;
}

}  // namespace detail

template <std::size_t W>
struct CliqueRemoval {
  BasicHypergraph<W> graph;
  std::vector<BasicVertexSet<W>> removed;
};

// Repeatedly deletes the edge lying in the most K_{ell+1} copies (ties: smallest
// edge) until none remain.
template <std::size_t W>
CliqueRemoval<W> greedy_clique_removal(const BasicHypergraph<W>& g, int ell) {
  if (g.r() != 2) throw PreconditionError("greedy_clique_removal needs a graph");
  if (ell < 1) throw PreconditionError("need ell >= 1");
  CliqueRemoval<W> out{g, {}};
  while (contains_clique(out.graph, ell + 1)) {
    auto adj = adjacency(out.graph);
    std::uint64_t best = 0;
    BasicVertexSet<W> pick;
    for (const auto& e : out.graph.edges()) {
      auto c = detail::cliques_through_edge(adj, e.first(), e.last(), ell + 1);
      if (c > best) {
        best = c;
        pick = e;
      }
    }
    out.graph.remove_edge(pick);
    out.removed.push_back(pick);
  }
  return out;
}

// Generalized pipeline for a graph G: G' = greedy_clique_removal(G, ell),
// epsilon = 1 - k_r(G') / t_r(n, ell), partition from a maximum ell-cut of G',
// bad edges counted in G (delta = bad / n^2).
template <std::size_t W>
BasicStabilityReport<W> extract_partition_generalized(const BasicHypergraph<W>& g, int ell, int r,
                                                       std::uint64_t seed = 0) {
  if (g.r() != 2) throw PreconditionError("generalized extraction needs a graph");
  if (r < 3 || ell < r) throw PreconditionError("generalized extraction needs ell >= r >= 3");
  auto removal = greedy_clique_removal(g, ell);
  BasicStabilityReport<W> rep;
  rep.method = "generalized";
  rep.n = g.n();
  rep.r = r;
  rep.ell = ell;
  rep.edges = g.size();
  rep.removed_edges = removal.removed.size();
  rep.target = turan_count(std::max(g.n(), 1), r, ell);
  rep.clique_count = count_cliques(removal.graph, r);
  rep.epsilon = rep.target == 0 ? Rational(0)
                                : 1 - Rational(static_cast<long long>(rep.clique_count),
                                               static_cast<long long>(rep.target));
  auto cut = max_ell_cut(removal.graph, ell, detail::cut_mode_for(g.n()), seed);
  rep.partition = cut.partition;
  rep.exact_cut = cut.exact;
  rep.crossing = cut.crossing;
  rep.delta_exponent = 2;
  detail::finish_report(rep, g);
  rep.invariants.push_back({"cleaned graph is K_(ell+1)-free", !contains_clique(removal.graph, ell + 1)});
  return rep;
}

template <std::size_t W>
struct BipartiteDistanceReport {
  BasicPartition<W> partition;  // blocks[0] = V1 holds at least half of the bad edges
  int n = 0;
  std::uint64_t edges = 0;
  std::vector<BasicVertexSet<W>> bad;    // B
  std::vector<BasicVertexSet<W>> bad1;   // B1 = B inside V1
  std::uint64_t missing = 0;             // |M|
  std::uint64_t missing_recount = 0;     // |M| by direct pair scan
  int max_internal_degree = 0;           // Delta
  Vertex delta_vertex = 0;
  int delta_vertex_d2 = 0;
  int case_taken = 2;
  std::vector<BasicVertexSet<W>> matching;
  Rational epsilon;  // 1/4 - |E|/n^2
  Rational delta;    // |B|/n^2
  bool exact_cut = false;
  std::vector<Check> inequalities;
  bool squared_case1_reading = false;    // |M| >= Delta^2, the bound the argument supports
  bool literal_case1_reading = false;    // |M| >= (Delta n)^2 as printed; informational only

  bool all_hold() const {
    return std::all_of(inequalities.begin(), inequalities.end(), [](const auto& c) { return c.holds; });
  }
};

// Bad and missing edges of a triangle-free graph against a maximum 2-cut, and
// the inequalities linking them:
//  (a) d_other(v) >= d_own(v) for every vertex,
//  (b) |M| >= d_1(v) d_2(v) >= Delta^2 at a vertex of maximum internal degree in V1,
//  (c) |M| >= sum (2|V2| - d_2(u_i) - d_2(v_i)) >= m |V2| over a greedy matching in B1,
//  (d) |M| <= (epsilon + delta) n^2.
template <std::size_t W>
BipartiteDistanceReport<W> bipartite_distance_analysis(const BasicHypergraph<W>& g, std::uint64_t seed = 0) {
  if (g.r() != 2) throw PreconditionError("bipartite analysis needs a graph");
  if (auto tri = find_clique(g, 3))
    throw PreconditionError("graph has triangle {" + std::to_string((*tri)[0]) + "," + std::to_string((*tri)[1]) +
                            "," + std::to_string((*tri)[2]) + "}");
  const int n = g.n();
  auto cut = max_ell_cut(g, 2, detail::cut_mode_for(n), seed);
  auto adj = adjacency(g);
  BipartiteDistanceReport<W> rep;
  rep.n = n;
  rep.edges = g.size();
  rep.exact_cut = cut.exact;
  auto v1 = cut.partition.blocks[0], v2 = cut.partition.blocks[1];
  auto internal_in = [&](const BasicVertexSet<W>& side) {
    std::uint64_t c = 0;
    for (const auto& e : g.edges())
      if (e.is_subset_of(side)) ++c;
    return c;
  };
  if (internal_in(v2) > internal_in(v1)) std::swap(v1, v2);
  rep.partition.blocks = {v1, v2};
  for (const auto& e : g.edges()) {
    if (e.is_subset_of(v1)) {
      rep.bad.push_back(e);
      rep.bad1.push_back(e);
    } else if (e.is_subset_of(v2)) {
      rep.bad.push_back(e);
    }
  }
  const auto s1 = static_cast<std::uint64_t>(v1.size()), s2 = static_cast<std::uint64_t>(v2.size());
  rep.missing = s1 * s2 - (g.size() - rep.bad.size());
  v1.for_each([&](Vertex a) { rep.missing_recount += static_cast<std::uint64_t>((v2 - adj[a]).size()); });

  const Rational n2 = Rational(static_cast<long long>(n) * n);
  rep.epsilon = Rational(1, 4) - Rational(static_cast<long long>(g.size())) / n2;
  rep.delta = Rational(static_cast<long long>(rep.bad.size())) / n2;

  auto add = [&](std::string name, const Rational& lhs, const Rational& rhs) {
    rep.inequalities.push_back({std::move(name), lhs.convert_to<double>(), rhs.convert_to<double>(), lhs.str(),
                                rhs.str(), lhs <= rhs});
  };
  add("|M| recount == formula (difference)", Rational(static_cast<long long>(rep.missing) -
                                                      static_cast<long long>(rep.missing_recount)),
      Rational(0));

  // (a)
  long long local_violations = 0;
  for (Vertex v = 1; v <= n; ++v) {
    bool in1 = v1.contains(v);
    int own = (adj[v] & (in1 ? v1 : v2)).size();
    int other = (adj[v] & (in1 ? v2 : v1)).size();
    if (own > other) ++local_violations;
  }
  add("(a) vertices with d_own > d_other", Rational(local_violations), Rational(0));

  // (b)
  int delta_max = -1;
  Vertex dv = 0;
  v1.for_each([&](Vertex v) {
    int d1 = (adj[v] & v1).size();
    if (d1 > delta_max) {
      delta_max = d1;
      dv = v;
    }
  });
  delta_max = std::max(delta_max, 0);
  rep.max_internal_degree = delta_max;
  rep.delta_vertex = dv;
  long long edges_between = 0;
  long long d1v = 0, d2v = 0;
  if (dv != 0) {
    auto n1 = adj[dv] & v1, n2set = adj[dv] & v2;
    d1v = n1.size();
    d2v = n2set.size();
    n1.for_each([&](Vertex a) { edges_between += (adj[a] & n2set).size(); });
  }
  rep.delta_vertex_d2 = static_cast<int>(d2v);
  const Rational missing(static_cast<long long>(rep.missing));
  add("(b) edges between N1(v) and N2(v)", Rational(edges_between), Rational(0));
  add("(b) d_1(v) d_2(v) <= |M|", Rational(d1v * d2v), missing);
  add("(b) Delta^2 <= d_1(v) d_2(v)", Rational(static_cast<long long>(delta_max) * delta_max), Rational(d1v * d2v));
  rep.squared_case1_reading = Rational(static_cast<long long>(delta_max) * delta_max) <= missing;
  rep.literal_case1_reading =
      Rational(static_cast<long long>(delta_max) * n) * Rational(static_cast<long long>(delta_max) * n) <= missing;
  // case 1 iff Delta >= delta^{1/3} n, i.e. Delta^3 >= |B| n
  rep.case_taken = static_cast<long long>(delta_max) * delta_max * delta_max >=
                           static_cast<long long>(rep.bad.size()) * n
                       ? 1
                       : 2;

  // (c)
  BasicVertexSet<W> matched;
  for (const auto& e : rep.bad1)
    if (!e.intersects(matched)) {
      rep.matching.push_back(e);
      matched |= e;
    }
  long long sum = 0, pair_violations = 0;
  for (const auto& e : rep.matching) {
    long long da = (adj[e.first()] & v2).size(), db = (adj[e.last()] & v2).size();
    if (da + db > static_cast<long long>(s2)) ++pair_violations;
    sum += 2 * static_cast<long long>(s2) - da - db;
  }
  const auto m = static_cast<long long>(rep.matching.size());
  add("(c) matching edges with d_2(u)+d_2(v) > |V2|", Rational(pair_violations), Rational(0));
  add("(c) sum (2|V2| - d_2(u_i) - d_2(v_i)) <= |M|", Rational(sum), missing);
  add("(c) m |V2| <= sum", Rational(m * static_cast<long long>(s2)), Rational(sum));
  add("(c) |B1| <= m (2 Delta)", Rational(static_cast<long long>(rep.bad1.size())),
      Rational(m * 2 * static_cast<long long>(delta_max)));

  // (d)
  add("(d) |M| <= (epsilon + delta) n^2", missing, (rep.epsilon + rep.delta) * n2);
  return rep;
}

// ---------------------------------------------------------------------------
// Epsilon-delta scan

enum class ScanFamily { Cancellative, KFree, TriangleFree };

struct ScanSpec {
  ScanFamily family = ScanFamily::Cancellative;
  std::vector<int> sizes;           // n values
  std::vector<double> parameters;   // deletion fractions, or target epsilons for triangle-free
  std::vector<std::uint64_t> seeds;
  double noise = 0.5;               // triangle-free generator only
};

struct ScanRow {
  int n = 0;
  std::uint64_t seed = 0;
  double parameter = 0.0;
  Rational epsilon;
  Rational delta;
  std::uint64_t bad_edges = 0;
  int case_taken = 0;  // 0 when not applicable
  bool flagged = false;  // linear law violated (cancellative: delta > 100 eps; k-free: delta > eps/(r-2)!)
  bool inequalities_hold = true;
  std::string error;
};

inline ScanRow scan_one(const ScanSpec& spec, int n, double param, std::uint64_t seed) {
  ScanRow row;
  row.n = n;
  row.seed = seed;
  row.parameter = param;
  try {
    switch (spec.family) {
      case ScanFamily::Cancellative: {
        auto h = perturb(turan_hypergraph(n, 3, 3), param, 0, seed);
        auto rep = extract_partition_cancellative(h);
        row.epsilon = rep.epsilon;
        row.delta = rep.delta;
        row.bad_edges = rep.bad_edges;
        row.flagged = rep.delta > 100 * rep.epsilon;
        row.inequalities_hold = rep.invariants_hold();
        break;
      }
      case ScanFamily::KFree: {
        auto h = perturb(turan_hypergraph(n, 3, 3), param, 0, seed);
        auto rep = extract_partition_kfree(h, 3, seed);
        row.epsilon = rep.epsilon;
        row.delta = rep.delta;
        row.bad_edges = rep.bad_edges;
        row.flagged = rep.delta * factorial(rep.r - 2) > rep.epsilon;
        row.inequalities_hold = rep.invariants_hold();
        break;
      }
      case ScanFamily::TriangleFree: {
        auto g = random_triangle_free_near_bipartite(n, param, spec.noise, seed);
        auto rep = bipartite_distance_analysis(g, seed);
        row.epsilon = rep.epsilon;
        row.delta = rep.delta;
        row.bad_edges = rep.bad.size();
        row.case_taken = rep.case_taken;
        row.inequalities_hold = rep.all_hold();
        break;
      }
    }
  } catch (const std::exception& ex) {
    row.error = ex.what();
  }
  return row;
}

// Rows in (n, parameter, seed) order; computed in parallel, emitted in order.
inline std::vector<ScanRow> epsilon_delta_scan(const ScanSpec& spec, int threads = 1) {
  struct Job {
    int n;
    double param;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int n : spec.sizes)
    for (double p : spec.parameters)
      for (auto s : spec.seeds) jobs.push_back({n, p, s});
  std::vector<ScanRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
      rows[i] = scan_one(spec, jobs[i].n, jobs[i].param, jobs[i].seed);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

inline std::string format_decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", r.convert_to<double>());
  return buf;
}

inline constexpr const char* kScanCsvHeader = "n,seed,epsilon,delta,bad_edges,case";

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << kScanCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.seed << ',';
    if (!r.error.empty()) {
      out << "error,error,error,error\n";
      continue;
    }
    out << format_decimal(r.epsilon) << ',' << format_decimal(r.delta) << ',' << r.bad_edges << ',';
    if (r.case_taken == 0)
      out << '-';
    else
      out << r.case_taken;
    out << '\n';
  }
  return out.str();
}

}  // namespace turanlab
