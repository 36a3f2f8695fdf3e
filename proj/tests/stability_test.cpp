#include <gtest/gtest.h>

#include "oracles.hpp"
#include "turanlab/checkers.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/serialize.hpp"
#include "turanlab/stability.hpp"

using namespace turanlab;

namespace {

Hypergraph cycle(int n) {
  std::vector<VertexSet> es;
  for (int v = 1; v <= n; ++v) es.push_back(make_set({v, v % n + 1}));
  return Hypergraph(n, 2, es);
}

// Bad edges recounted from scratch: edges with two vertices in one block.
std::uint64_t recount_bad(const Hypergraph& h, const Partition& p) {
  std::vector<int> block(static_cast<std::size_t>(h.n()) + 1, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) p.blocks[b].for_each([&](Vertex v) { block[v] = static_cast<int>(b); });
  std::uint64_t bad = 0;
  for (const auto& e : oracle::edges_of(h)) {
    bool hit = false;
    for (std::size_t i = 0; i < e.size() && !hit; ++i)
      for (std::size_t j = i + 1; j < e.size() && !hit; ++j) hit = block[e[i]] == block[e[j]];
    if (hit) ++bad;
  }
  return bad;
}

void expect_report_consistent(const StabilityReport& rep, const Hypergraph& host) {
  EXPECT_TRUE(is_partition_of(rep.partition, host.n()));
  EXPECT_EQ(rep.bad_edges, recount_bad(host, rep.partition));
  Rational power = 1;
  for (int i = 0; i < rep.delta_exponent; ++i) power *= host.n();
  EXPECT_EQ(rep.delta, Rational(static_cast<long long>(rep.bad_edges)) / power);
  for (const auto& c : rep.invariants) EXPECT_TRUE(c.holds) << c.name;
}

}  // namespace

TEST(KFreeExtractor, Examples) {
  auto t9 = turan_hypergraph(9, 3, 3);
  auto rep = extract_partition_kfree(t9, 3);
  EXPECT_EQ(rep.bad_edges, 0u);
  EXPECT_EQ(rep.delta, 0);
  EXPECT_EQ(rep.epsilon, 0);
  expect_report_consistent(rep, t9);

  auto p = perturb(t9, 0.1, 0, 7);
  auto prep = extract_partition_kfree(p, 3);
  EXPECT_TRUE(prep.exact_cut);
  EXPECT_EQ(prep.bad_edges, 0u);

  // T_3(9,3) minus two edges plus a triple with a within-part pair
  auto h = t9;
  h.remove_edge(make_set({1, 4, 7}));
  h.remove_edge(make_set({2, 5, 8}));
  int added = 0;
  for (const auto& t : oracle::subsets(9, 3)) {
    auto s = make_set({t[0], t[1], t[2]});
    if (h.contains(s)) continue;
    auto more = h;
    more.add_edge(s);
    if (!is_k_free(more, 3)) continue;
    auto r = extract_partition_kfree(more, 3);
    expect_report_consistent(r, more);
    EXPECT_LE(r.bad_edges, 1u);
    ++added;
  }
  EXPECT_GT(added, 0);
  EXPECT_THROW(extract_partition_kfree(make_hypergraph(4, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}), 3),
               PreconditionError);
}

TEST(CancellativeExtractor, Examples) {
  auto t9 = turan_hypergraph(9, 3, 3);
  auto rep = extract_partition_cancellative(t9);
  EXPECT_EQ(rep.bad_edges, 0u);
  EXPECT_TRUE(same_up_to_relabeling(rep.partition, balanced_partition<1>(9, 3)));
  expect_report_consistent(rep, t9);
  ASSERT_TRUE(rep.witness_chain.has_value());
  EXPECT_FALSE(rep.degenerate);

  auto t12 = turan_hypergraph(12, 3, 3);
  for (const auto& e : t12.edges()) {
    auto h = t12;
    h.remove_edge(e);
    auto r = extract_partition_cancellative(h);
    expect_report_consistent(r, h);
    EXPECT_LE(r.bad_edges, 1u);
  }

  auto one = make_hypergraph(3, 3, {{1, 2, 3}});
  auto single = extract_partition_cancellative(one);
  EXPECT_TRUE(single.degenerate);
  EXPECT_TRUE(is_partition_of(single.partition, 3));
  EXPECT_EQ(single.bad_edges, 0u);

  EXPECT_THROW(extract_partition_cancellative(Hypergraph(5, 3)), PreconditionError);
  EXPECT_THROW(extract_partition_cancellative(make_hypergraph(5, 3, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}})),
               PreconditionError);
}

TEST(CancellativeExtractor, WitnessChainChoices) {
  auto h = perturb(turan_hypergraph(12, 3, 3), 0.2, 0, 3);
  auto rep = extract_partition_cancellative(h);
  const auto& w = *rep.witness_chain;
  EXPECT_EQ(w.n_t, neighborhood(h, w.t));
  EXPECT_EQ(w.degree_t, degree(h, w.t));
  EXPECT_TRUE(w.n_t.contains(w.pair.first));
  EXPECT_TRUE(w.n_t.contains(w.pair.second));
  // (u, v) maximizes |L(u, v)| over N(T)^2
  auto lk = link(h, w.pair);
  EXPECT_EQ(static_cast<long long>(lk.size()), w.link_size);
  w.n_t.for_each([&](Vertex u) {
    w.n_t.for_each([&](Vertex v) { EXPECT_LE(static_cast<long long>(link(h, OrderedPair{u, v}).size()), w.link_size); });
  });
  // {x, y} is an edge of L(u, v), V2 = N_L(x), V3 = N_L(y)
  EXPECT_TRUE(std::find(lk.begin(), lk.end(), make_set({w.x, w.y})) != lk.end());
  VertexSet nx, ny;
  for (const auto& e : lk) {
    if (e.contains(w.x)) nx |= e - make_set({w.x});
    if (e.contains(w.y)) ny |= e - make_set({w.y});
  }
  EXPECT_EQ(w.v2, nx);
  EXPECT_EQ(w.v3, ny);
  // T maximizes the normalized score
  const int n = h.n();
  for (const auto& t : shadow(h)) {
    auto nt = neighborhood(h, t);
    long long sum = 0;
    nt.for_each([&](Vertex u) { nt.for_each([&](Vertex v) { sum += static_cast<long long>(link(h, OrderedPair{u, v}).size()); }); });
    const long long d = nt.size();
    EXPECT_LE(Rational(4 * sum, d * d * (n - d) * (n - d)), w.score);
  }
}

TEST(Property, CancellativeExtractorInvariants) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 6 + static_cast<int>(seed % 10);
    Hypergraph h = seed % 2 ? random_maximal_cancellative<1>(n, seed)
                            : perturb(turan_hypergraph(n, 3, 3), 0.05 * static_cast<double>(seed % 7), 0, seed);
    if (h.empty()) continue;
    auto rep = extract_partition_cancellative(h);
    expect_report_consistent(rep, h);
  }
}

TEST(MaxDegreeSumEdge, Examples) {
  auto k33 = max_degree_sum_edge(turan_graph(6, 2));
  EXPECT_EQ(k33.degree_sum, 6);
  EXPECT_TRUE(k33.disjoint);
  auto c5 = max_degree_sum_edge(cycle(5));
  EXPECT_EQ(c5.degree_sum, 4);
  EXPECT_TRUE(c5.averaging_bound);
  auto star = max_degree_sum_edge(make_hypergraph(6, 2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}));
  EXPECT_EQ(star.degree_sum, 6);
  EXPECT_EQ(star.x, 1);
  EXPECT_THROW(max_degree_sum_edge(Hypergraph(4, 2)), PreconditionError);
  EXPECT_THROW(max_degree_sum_edge(turan_graph(3, 3)), PreconditionError);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = random_triangle_free_near_bipartite<1>(12 + static_cast<int>(seed % 20), 0.03, 0.6, seed);
    EXPECT_NO_THROW(max_degree_sum_edge(g));
  }
}

TEST(GreedyCliqueRemoval, Examples) {
  auto free = greedy_clique_removal(turan_graph(9, 3), 3);
  EXPECT_TRUE(free.removed.empty());
  auto k4 = greedy_clique_removal(turan_graph(4, 4), 3);
  EXPECT_EQ(k4.removed.size(), 1u);
  auto two = make_hypergraph(8, 2, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                                     {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}});
  auto out = greedy_clique_removal(two, 3);
  EXPECT_EQ(out.removed.size(), 2u);
  EXPECT_FALSE(contains_clique(out.graph, 4));
}

TEST(Property, GreedyCliqueRemovalLeavesCliqueFreeSubgraph) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 6 + static_cast<int>(seed % 8);
    const int ell = 2 + static_cast<int>(seed % 3);
    auto g = oracle::random_hypergraph(n, 2, 0.4 + 0.05 * static_cast<double>(seed % 5), seed);
    auto out = greedy_clique_removal(g, ell);
    auto es = oracle::edges_of(out.graph);
    EXPECT_EQ(oracle::count_cliques(n, es, ell + 1), 0u) << seed;
    EXPECT_EQ(out.graph.size() + out.removed.size(), g.size());
    for (const auto& e : out.graph.edges()) EXPECT_TRUE(g.contains(e));
    // nothing is removed from a graph that was already free
    if (oracle::count_cliques(n, oracle::edges_of(g), ell + 1) == 0) {
      EXPECT_TRUE(out.removed.empty());
    }
  }
}

TEST(GeneralizedExtractor, Examples) {
  auto k222 = turan_graph(6, 3);
  auto rep = extract_partition_generalized(k222, 3, 3);
  EXPECT_EQ(rep.epsilon, 0);
  EXPECT_EQ(rep.delta, 0);
  EXPECT_EQ(rep.clique_count, 8u);
  expect_report_consistent(rep, k222);

  auto plus = k222;
  for (const auto& e : oracle::subsets(6, 2)) {
    auto s = make_set({e[0], e[1]});
    if (!plus.contains(s)) {
      plus.add_edge(s);
      break;
    }
  }
  auto prep = extract_partition_generalized(plus, 3, 3);
  EXPECT_LE(prep.bad_edges, 1u);
  EXPECT_EQ(prep.removed_edges, 1u);
  expect_report_consistent(prep, plus);

  auto empty = extract_partition_generalized(Hypergraph(6, 2), 3, 3);
  EXPECT_EQ(empty.epsilon, 1);
  EXPECT_EQ(empty.delta, 0);
  EXPECT_THROW(extract_partition_generalized(k222, 2, 3), PreconditionError);
  EXPECT_THROW(extract_partition_generalized(turan_hypergraph(6, 3, 3), 3, 3), PreconditionError);
}

TEST(Property, GeneralizedExtractorOnPlantedEdges) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 9 + static_cast<int>(seed % 10);
    auto g = turan_graph(n, 3);
    auto parts = balanced_partition<1>(n, 3);
    std::mt19937_64 rng(seed);
    const int k = static_cast<int>(seed % 4);
    int planted = 0;
    while (planted < k) {
      const auto& block = parts.blocks[rng() % 3];
      auto vs = block.members();
      auto a = vs[rng() % vs.size()], b = vs[rng() % vs.size()];
      if (a == b || g.contains(make_set({a, b}))) continue;
      g.add_edge(make_set({a, b}));
      ++planted;
    }
    auto rep = extract_partition_generalized(g, 3, 3, seed);
    expect_report_consistent(rep, g);
    EXPECT_LE(rep.bad_edges, static_cast<std::uint64_t>(k)) << seed;
  }
}

TEST(BipartiteAnalysis, Examples) {
  auto k55 = bipartite_distance_analysis(turan_graph(10, 2));
  EXPECT_TRUE(k55.bad.empty());
  EXPECT_EQ(k55.missing, 0u);
  EXPECT_EQ(k55.epsilon, 0);
  EXPECT_EQ(k55.delta, 0);
  EXPECT_TRUE(k55.all_hold());

  auto c5 = bipartite_distance_analysis(cycle(5));
  EXPECT_EQ(c5.bad.size(), 1u);
  EXPECT_EQ(c5.edges - c5.bad.size(), 4u);
  EXPECT_EQ(c5.missing, c5.missing_recount);
  EXPECT_TRUE(c5.all_hold());

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = random_triangle_free_near_bipartite<1>(40, 0.02, 0.5, seed);
    auto rep = bipartite_distance_analysis(g, seed);
    EXPECT_TRUE(rep.all_hold()) << seed;
    EXPECT_EQ(rep.missing, rep.missing_recount);
    EXPECT_EQ(rep.epsilon, Rational(1, 4) - Rational(static_cast<long long>(g.size()), 1600));
  }
  EXPECT_THROW(bipartite_distance_analysis(turan_graph(3, 3)), PreconditionError);
}

TEST(Property, BipartiteAnalysisCounts) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 8 + static_cast<int>(seed % 13);
    auto g = random_triangle_free_near_bipartite<1>(n, 0.01 * static_cast<double>(seed % 6), 0.7, seed);
    auto rep = bipartite_distance_analysis(g, seed);
    ASSERT_TRUE(rep.all_hold()) << seed;
    // B is exactly the set of edges inside a block
    EXPECT_EQ(rep.bad.size(), count_bad_edges(g, rep.partition));
    // M counts non-adjacent cross pairs
    const auto& v1 = rep.partition.blocks[0];
    const auto& v2 = rep.partition.blocks[1];
    std::uint64_t missing = 0;
    v1.for_each([&](Vertex a) {
      v2.for_each([&](Vertex b) {
        if (!g.contains(make_set({a, b}))) ++missing;
      });
    });
    EXPECT_EQ(rep.missing, missing);
    std::uint64_t in1 = 0;
    for (const auto& e : rep.bad)
      if (v1.contains(e.first()) && v1.contains(e.last())) ++in1;
    EXPECT_EQ(rep.bad1.size(), in1);
    EXPECT_GE(2 * in1, rep.bad.size());
  }
}

TEST(EpsilonDeltaScan, RowsAndDeterminism) {
  ScanSpec spec;
  spec.family = ScanFamily::Cancellative;
  spec.sizes = {15, 30};
  spec.parameters = {0.05};
  spec.seeds = {1, 2, 3, 4, 5};
  auto rows = epsilon_delta_scan(spec, 1);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0].n, 15);
  EXPECT_EQ(rows[9].n, 30);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(r.inequalities_hold);
  }
  EXPECT_EQ(scan_csv(epsilon_delta_scan(spec, 4)), scan_csv(rows));

  spec.parameters = {0.0};
  for (const auto& r : epsilon_delta_scan(spec, 2)) {
    EXPECT_EQ(r.epsilon, 0);
    EXPECT_EQ(r.delta, 0);
  }

  ScanSpec tf;
  tf.family = ScanFamily::TriangleFree;
  tf.sizes = {20};
  tf.parameters = {0.01, 0.03};
  tf.seeds = {1, 2};
  auto csv = scan_csv(epsilon_delta_scan(tf, 3));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kScanCsvHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(StabilityJson, StableFieldOrder) {
  auto rep = extract_partition_cancellative(turan_hypergraph(9, 3, 3));
  auto a = to_json(rep).dump();
  auto b = to_json(extract_partition_cancellative(turan_hypergraph(9, 3, 3))).dump();
  EXPECT_EQ(a, b);
  auto j = to_json(rep);
  EXPECT_EQ(j.begin().key(), "method");
}
