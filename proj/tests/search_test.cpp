#include <gtest/gtest.h>

#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/checkers.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/search.hpp"

using namespace turanlab;

namespace {

Hypergraph cycle(int n) {
  std::vector<VertexSet> es;
  for (int v = 1; v <= n; ++v) es.push_back(make_set({v, v % n + 1}));
  return Hypergraph(n, 2, es);
}

Hypergraph petersen() {
  return make_hypergraph(10, 2,
                         {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                          {6, 8}, {8, 10}, {7, 10}, {7, 9}, {6, 9}});
}

SearchConfig with_threads(int threads) {
  SearchConfig c;
  c.thread_count = threads;
  return c;
}

void expect_witnesses_valid(const ExtremalRecord& rec, const Predicate& p) {
  for (const auto& w : rec.witnesses) {
    EXPECT_EQ(w.size(), rec.value);
    EXPECT_TRUE(predicate_holds(p, w));
  }
  for (std::size_t i = 0; i < rec.witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < rec.witnesses.size(); ++j)
      EXPECT_FALSE(isomorphic(rec.witnesses[i], rec.witnesses[j]));
}

}  // namespace

TEST(ExtremalNumber, Examples) {
  auto canc6 = extremal_number(6, 3, Predicate::cancellative());
  ASSERT_TRUE(canc6.complete);
  EXPECT_EQ(canc6.value, 8u);
  EXPECT_TRUE(uniqueness_check(canc6, turan_hypergraph(6, 3, 3)));

  auto mantel5 = extremal_number(5, 2, Predicate::triangle_free());
  EXPECT_EQ(mantel5.value, 6u);

  auto k7 = extremal_number(7, 3, Predicate::k_free(3));
  EXPECT_EQ(k7.value, 12u);
  expect_witnesses_valid(k7, Predicate::k_free(3));
}

TEST(ExtremalNumber, MatchesFullEnumeration) {
  // every edge subset of K_5^(3) and of K_n for n <= 6
  auto canc = oracle::extremal(5, 3, [](const oracle::Edges& es) { return oracle::is_cancellative(es); });
  auto rec = extremal_number(5, 3, Predicate::cancellative());
  EXPECT_EQ(rec.value, canc.first);
  EXPECT_EQ(rec.extremal_classes, oracle::isomorphism_classes(5, canc.second));
  expect_witnesses_valid(rec, Predicate::cancellative());

  auto kfree = oracle::extremal(5, 3, [](const oracle::Edges& es) { return !oracle::has_covered_clique(5, es, 4); });
  auto krec = extremal_number(5, 3, Predicate::k_free(3));
  EXPECT_EQ(krec.value, kfree.first);
  EXPECT_EQ(krec.extremal_classes, oracle::isomorphism_classes(5, kfree.second));

  for (int n = 3; n <= 6; ++n) {
    auto tf = oracle::extremal(n, 2, [n](const oracle::Edges& es) { return oracle::count_cliques(n, es, 3) == 0; });
    auto trec = extremal_number(n, 2, Predicate::triangle_free());
    EXPECT_EQ(trec.value, tf.first) << n;
    EXPECT_EQ(trec.extremal_classes, oracle::isomorphism_classes(n, tf.second)) << n;
  }
}

TEST(ExtremalNumber, UniquenessAgainstWrongTarget) {
  auto rec = extremal_number(4, 2, Predicate::triangle_free());
  EXPECT_TRUE(uniqueness_check(rec, turan_graph(4, 2)));
  EXPECT_TRUE(uniqueness_check(rec, cycle(4)));
  EXPECT_FALSE(uniqueness_check(rec, make_hypergraph(4, 2, {{1, 2}, {2, 3}, {3, 4}, {1, 3}})));
  ExtremalRecord incomplete;
  EXPECT_THROW(uniqueness_check(incomplete, turan_graph(4, 2)), PreconditionError);
}

TEST(ExtremalNumber, MonotoneInN) {
  std::uint64_t prev = 0;
  for (int n = 3; n <= 7; ++n) {
    auto rec = extremal_number(n, 3, Predicate::cancellative());
    EXPECT_GE(rec.value, prev);
    prev = rec.value;
  }
}

TEST(ExtremalNumber, DeterministicAcrossThreadsAndOrderings) {
  auto base = extremal_number(7, 3, Predicate::cancellative(), with_threads(1));
  for (int threads : {2, 4, 8}) {
    auto rec = extremal_number(7, 3, Predicate::cancellative(), with_threads(threads));
    EXPECT_EQ(rec.value, base.value);
    EXPECT_EQ(rec.extremal_classes, base.extremal_classes);
    EXPECT_EQ(rec.nodes_explored, base.nodes_explored);
    ASSERT_EQ(rec.witnesses.size(), base.witnesses.size());
    for (std::size_t i = 0; i < rec.witnesses.size(); ++i)
      EXPECT_EQ(rec.witnesses[i].edges(), base.witnesses[i].edges());
  }
  SearchConfig greedy;
  greedy.ordering = Ordering::DegreeGreedy;
  greedy.symmetry_depth = 1;
  auto other = extremal_number(7, 3, Predicate::cancellative(), greedy);
  EXPECT_EQ(other.value, base.value);
  EXPECT_EQ(other.extremal_classes, base.extremal_classes);
}

TEST(ExtremalNumber, BudgetExhaustionIsIncomplete) {
  SearchConfig tiny;
  tiny.node_budget = 10;
  auto rec = extremal_number(7, 3, Predicate::cancellative(), tiny);
  EXPECT_FALSE(rec.complete);
  EXPECT_EQ(rec.value, 0u);
  EXPECT_TRUE(rec.witnesses.empty());
}

TEST(ExtremalNumber, Guards) {
  EXPECT_THROW(extremal_number(9, 3, Predicate::cancellative()), PreconditionError);
  EXPECT_THROW(extremal_number(11, 2, Predicate::triangle_free()), PreconditionError);
  EXPECT_THROW(extremal_number(5, 2, Predicate::cancellative()), PreconditionError);
  EXPECT_THROW(extremal_number(5, 3, Predicate::k_free(2)), PreconditionError);
  EXPECT_THROW(Predicate::custom_predicate("x", [](const Hypergraph&) { return true; }, false), PreconditionError);
}

TEST(ExtremalNumber, CustomHereditaryPredicate) {
  // at most two edges through any vertex
  auto pred = Predicate::custom_predicate(
      "max-degree-2",
      [](const Hypergraph& h) {
        std::vector<int> deg(static_cast<std::size_t>(h.n()) + 1, 0);
        for (const auto& e : h.edges()) e.for_each([&](Vertex v) { ++deg[static_cast<std::size_t>(v)]; });
        return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
      },
      true);
  auto rec = extremal_number(6, 2, pred);
  EXPECT_EQ(rec.value, 6u);  // 2-regular on 6 vertices
  EXPECT_EQ(rec.extremal_classes, 2u);  // C_6 and two disjoint triangles
}

TEST(MaxCut, Examples) {
  auto c5 = max_ell_cut(cycle(5), 2, CutMode::Exact, 0);
  EXPECT_EQ(c5.crossing, 4u);
  EXPECT_TRUE(c5.exact);
  auto k222 = max_ell_cut(turan_graph(6, 3), 3, CutMode::Exact, 0);
  EXPECT_EQ(k222.crossing, 12u);
  EXPECT_EQ(count_bad_edges(turan_graph(6, 3), k222.partition), 0u);
  auto pet = max_ell_cut(petersen(), 2, CutMode::Exact, 0);
  EXPECT_EQ(pet.crossing, oracle::max_cut(10, oracle::edges_of(petersen()), 2));
  EXPECT_EQ(pet.crossing, 12u);
  EXPECT_THROW(max_ell_cut(Hypergraph(21, 2), 2, CutMode::Exact, 0), PreconditionError);
  EXPECT_THROW(max_ell_cut(cycle(5), 1, CutMode::Exact, 0), PreconditionError);
}

TEST(Property, ExactCutMatchesBruteForce) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int ell = 2 + static_cast<int>(seed % 2);
    const int n = ell == 2 ? 4 + static_cast<int>(seed % 7) : 4 + static_cast<int>(seed % 4);
    auto g = oracle::random_hypergraph(n, 2, 0.3 + 0.1 * static_cast<double>(seed % 5), seed);
    auto cut = max_ell_cut(g, ell, CutMode::Exact, seed);
    ASSERT_EQ(cut.crossing, oracle::max_cut(n, oracle::edges_of(g), ell)) << "seed " << seed;
    EXPECT_EQ(count_crossing_edges(g, cut.partition), cut.crossing);
    EXPECT_TRUE(is_partition_of(cut.partition, n));
    EXPECT_EQ(cut.partition.blocks.size(), static_cast<std::size_t>(ell));
  }
}

TEST(Property, LocalCutIsVertexMoveOptimal) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const int ell = 2 + static_cast<int>(seed % 3);
    const int n = 10 + static_cast<int>(seed % 40);
    auto g = oracle::random_hypergraph(n, 2, 0.1 + 0.05 * static_cast<double>(seed % 6), seed);
    auto cut = max_ell_cut(g, ell, CutMode::Local, seed);
    EXPECT_FALSE(cut.exact);
    ASSERT_TRUE(is_vertex_move_optimal(g, cut.partition)) << "seed " << seed;
    auto adj = adjacency(g);
    for (Vertex v = 1; v <= n; ++v) {
      int own = cut.partition.block_of(v);
      int d_own = (adj[v] & cut.partition.blocks[static_cast<std::size_t>(own)]).size();
      for (std::size_t b = 0; b < cut.partition.blocks.size(); ++b)
        EXPECT_LE(d_own, (adj[v] & cut.partition.blocks[b]).size());
    }
    auto again = max_ell_cut(g, ell, CutMode::Local, seed);
    EXPECT_EQ(again.partition, cut.partition);
  }
}
