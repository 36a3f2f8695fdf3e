#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "turanlab/checkers.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/embedding.hpp"

using namespace turanlab;

namespace {

Hypergraph cycle(int n) {
  std::vector<VertexSet> es;
  for (int v = 1; v <= n; ++v) es.push_back(make_set({v, v % n + 1}));
  return Hypergraph(n, 2, es);
}

double quantity(const CertificateReport& rep, const std::string& name) {
  auto* q = rep.quantity(name);
  EXPECT_NE(q, nullptr) << name;
  return q ? q->value : NAN;
}

std::string exact(const CertificateReport& rep, const std::string& name) {
  auto* q = rep.quantity(name);
  return q ? q->exact : "";
}

// All cancellative 3-graphs on [n] (n <= 5), by filtering every triple set.
std::vector<Hypergraph> all_cancellative(int n) {
  auto triples = oracle::subsets(n, 3);
  std::vector<Hypergraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << triples.size()); ++mask) {
    oracle::Edges es;
    for (std::size_t i = 0; i < triples.size(); ++i)
      if (mask >> i & 1) es.push_back(triples[i]);
    if (oracle::is_cancellative(es)) out.push_back(oracle::build(n, 3, es));
  }
  return out;
}

}  // namespace

TEST(Cancellative, Examples) {
  auto bad = make_hypergraph(5, 3, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}});
  auto w = find_cancellative_violation(bad);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(((*w)[0] ^ (*w)[1]), make_set({3, 4}));
  EXPECT_TRUE(((*w)[0] ^ (*w)[1]).is_subset_of((*w)[2]));
  EXPECT_FALSE(is_cancellative(bad));
  EXPECT_TRUE(is_cancellative(turan_hypergraph(6, 3, 3)));
  EXPECT_TRUE(is_cancellative(make_hypergraph(4, 3, {{2, 3, 4}})));
  EXPECT_THROW(is_cancellative(cycle(4)), PreconditionError);
}

TEST(Property, CancellativeMatchesBruteForceAndNeighborhoodIndependence) {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    auto h = oracle::random_hypergraph(n, 3, 0.04 + 0.02 * static_cast<double>(seed % 8), seed);
    bool bf = oracle::is_cancellative(oracle::edges_of(h));
    ASSERT_EQ(is_cancellative(h), bf) << "seed " << seed;
    ASSERT_EQ(neighborhoods_independent(h), bf) << "seed " << seed;
    if (bf) {
      EXPECT_TRUE(links_triangle_free(h));
    }
  }
}

TEST(Property, GeneralUniformityCancellative) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int r = 2 + static_cast<int>(seed % 3);
    const int n = r + 2 + static_cast<int>(seed % 3);
    auto h = oracle::random_hypergraph(n, r, 0.15, seed);
    ASSERT_EQ(is_cancellative(h, true), oracle::is_cancellative(oracle::edges_of(h))) << "seed " << seed;
  }
}

TEST(LinksTriangleFree, Examples) {
  EXPECT_TRUE(links_triangle_free(turan_hypergraph(9, 3, 3)));
  EXPECT_FALSE(links_triangle_free(make_hypergraph(4, 3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}})));
  EXPECT_TRUE(links_triangle_free(Hypergraph(5, 3)));
  EXPECT_FALSE(neighborhoods_independent(make_hypergraph(5, 3, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}})));
  EXPECT_TRUE(neighborhoods_independent(make_hypergraph(3, 3, {{1, 2, 3}})));
}

TEST(KFree, Examples) {
  auto t9 = turan_hypergraph(9, 3, 3);
  EXPECT_TRUE(is_k_free(t9, 3));
  for (const auto& t : oracle::subsets(9, 3)) {
    auto s = make_set({t[0], t[1], t[2]});
    if (t9.contains(s)) continue;
    auto more = t9;
    more.add_edge(s);
    EXPECT_FALSE(is_k_free(more, 3));
    EXPECT_TRUE(oracle::has_covered_clique(9, oracle::edges_of(more), 4));
  }
  EXPECT_TRUE(is_k_free(make_hypergraph(3, 3, {{1, 2, 3}}), 3));
  EXPECT_THROW(is_k_free(t9, 2), PreconditionError);
}

// The pair-coverage shortcut against direct embedding of every family member.
TEST(Property, KFreeShortcutMatchesDirectEmbedding) {
  auto fam_by_cap = [](int n, int ell) { return k_family(3, ell, n); };
  std::map<std::pair<int, int>, ForbiddenFamily> families;
  auto family = [&](int n, int ell) -> const ForbiddenFamily& {
    auto key = std::pair(n, ell);
    if (!families.contains(key)) families.emplace(key, fam_by_cap(n, ell));
    return families.at(key);
  };
  // every 3-graph on 5 vertices, ell = 3 and 4
  auto triples = oracle::subsets(5, 3);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << triples.size()); ++mask) {
    oracle::Edges es;
    for (std::size_t i = 0; i < triples.size(); ++i)
      if (mask >> i & 1) es.push_back(triples[i]);
    auto h = oracle::build(5, 3, es);
    for (int ell : {3, 4}) ASSERT_EQ(is_k_free(h, ell), is_k_free_direct(h, family(5, ell))) << mask;
  }
  // seeded samples at n = 6, 7
  for (std::uint64_t seed = 1; seed <= 160; ++seed) {
    const int n = 6 + static_cast<int>(seed % 2);
    auto h = oracle::random_hypergraph(n, 3, 0.05 + 0.03 * static_cast<double>(seed % 6), seed);
    for (int ell : {3, 4}) ASSERT_EQ(is_k_free(h, ell), is_k_free_direct(h, family(n, ell))) << "seed " << seed;
  }
}

TEST(FisherRyan, Examples) {
  auto k4 = turan_graph(4, 4);
  auto rep = fisher_ryan_certificate(k4, 4);
  EXPECT_TRUE(rep.holds);
  for (int i = 1; i <= 4; ++i) EXPECT_NEAR(quantity(rep, "c_" + std::to_string(i)), 1.0, 1e-12);

  auto c5 = fisher_ryan_certificate(cycle(5), 2);
  EXPECT_TRUE(c5.holds);
  EXPECT_NEAR(quantity(c5, "c_2"), std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(quantity(c5, "c_1"), 2.5, 1e-12);

  auto k222 = fisher_ryan_certificate(turan_graph(6, 3), 3);
  EXPECT_TRUE(k222.holds);
  EXPECT_EQ(exact(k222, "k_3"), "8");
  EXPECT_EQ(exact(k222, "k_2"), "12");
  for (int i = 1; i <= 3; ++i) EXPECT_NEAR(quantity(k222, "c_" + std::to_string(i)), 2.0, 1e-12);

  EXPECT_THROW(fisher_ryan_certificate(k4, 3), PreconditionError);
}

TEST(LinkCountIdentity, Examples) {
  auto two = make_hypergraph(4, 3, {{1, 2, 3}, {1, 2, 4}});
  auto rep = link_count_identity(two);
  EXPECT_TRUE(rep.holds);
  EXPECT_FALSE(rep.vacuous);
  EXPECT_TRUE(link_count_identity(Hypergraph(4, 3)).vacuous);
  // (3,4): one shadow pair {1,2} has both; L(3,4) = {{1,2}}
  EXPECT_EQ(link(two, OrderedPair{3, 4}).size(), 1u);
  EXPECT_EQ(link(two, OrderedPair{3, 3}).size(), link(two, make_set({3})).size());
}

TEST(ReciprocalLink, Examples) {
  auto one = reciprocal_link_certificate(make_hypergraph(3, 3, {{1, 2, 3}}));
  EXPECT_TRUE(one.holds);
  EXPECT_EQ(exact(one, "lhs"), "3");
  EXPECT_EQ(exact(one, "rhs"), "3");
  EXPECT_TRUE(reciprocal_link_certificate(turan_hypergraph(6, 3, 3)).holds);
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    EXPECT_TRUE(reciprocal_link_certificate(random_maximal_cancellative<1>(9, seed)).holds);
  EXPECT_THROW(reciprocal_link_certificate(make_hypergraph(5, 3, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}})),
               PreconditionError);
  EXPECT_TRUE(reciprocal_link_certificate(Hypergraph(4, 3)).vacuous);
}

TEST(EdgeCountChain, Examples) {
  auto t9 = edge_count_chain_certificate(turan_hypergraph(9, 3, 3));
  EXPECT_TRUE(t9.holds);
  // the balanced tripartition sits at the maximizer z = 1/2, so both bounds are tight
  EXPECT_EQ(exact(t9, "z"), "1/2");
  for (const auto& c : t9.checks)
    if (c.name == "|H| <= (n/3)^3" || c.name == "|H| <= z n^3/(6(z+1)(2z^2+1))") {
      EXPECT_EQ(c.lhs_exact, c.rhs_exact) << c.name;
    }
  auto one = edge_count_chain_certificate(make_hypergraph(3, 3, {{1, 2, 3}}));
  EXPECT_TRUE(one.holds);
  EXPECT_EQ(exact(one, "z"), "1/2");
  for (const auto& c : one.checks)
    if (c.name == "|H| <= z n^3/(6(z+1)(2z^2+1))") {
      EXPECT_EQ(c.rhs_exact, "1");
    }
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    EXPECT_TRUE(edge_count_chain_certificate(random_maximal_cancellative<1>(8, seed)).holds);
}

TEST(MantelLinkBound, Examples) {
  auto t9 = mantel_link_bound(turan_hypergraph(9, 3, 3));
  EXPECT_TRUE(t9.holds);
  EXPECT_NEAR(quantity(t9, "max |L|/((n-d)/2)^2"), 1.0, 1e-12);
  auto one = mantel_link_bound(make_hypergraph(3, 3, {{1, 2, 3}}));
  EXPECT_TRUE(one.holds);
  auto empty = mantel_link_bound(Hypergraph(5, 3));
  EXPECT_TRUE(empty.holds);
  EXPECT_TRUE(empty.vacuous);
}

TEST(Property, CertificatesOnEveryCancellativeFiveVertexGraph) {
  auto all = all_cancellative(5);
  ASSERT_GT(all.size(), 1u);
  for (const auto& h : all) {
    EXPECT_TRUE(link_count_identity(h).holds);
    EXPECT_TRUE(reciprocal_link_certificate(h).holds);
    EXPECT_TRUE(edge_count_chain_certificate(h).holds);
    EXPECT_TRUE(mantel_link_bound(h).holds);
    EXPECT_TRUE(links_triangle_free(h));
  }
}

TEST(Property, LinkCountIdentityOnArbitrary3Graphs) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    auto h = oracle::random_hypergraph(n, 3, 0.05 + 0.05 * static_cast<double>(seed % 9), seed);
    ASSERT_TRUE(link_count_identity(h).holds) << "seed " << seed;
  }
}

TEST(Property, FisherRyanOnCliqueFreeGraphs) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const int ell = 2 + static_cast<int>(seed % 3);
    auto g = oracle::random_hypergraph(n, 2, 0.2 + 0.1 * static_cast<double>(seed % 7), seed);
    while (contains_clique(g, ell + 1)) {
      auto k = find_clique(g, ell + 1);
      g.remove_edge(make_set({(*k)[0], (*k)[1]}));
    }
    ASSERT_TRUE(fisher_ryan_certificate(g, ell).holds) << "seed " << seed;
  }
}
