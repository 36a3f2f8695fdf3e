#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "turanlab/cliques.hpp"
#include "turanlab/constructions.hpp"
#include "turanlab/embedding.hpp"
#include "turanlab/hypergraph.hpp"
#include "turanlab/predicates.hpp"

namespace turanlab {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kChainTolerance = 1e-9;

// A named intermediate value. `exact` holds "p/q" when the value is rational.
struct Quantity {
  std::string name;
  double value = 0.0;
  std::string exact;
};

// One comparison lhs <= rhs.
struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string lhs_exact;
  std::string rhs_exact;
  bool holds = true;
};

struct CertificateReport {
  std::string name;
  std::vector<Quantity> quantities;
  std::vector<Check> checks;
  bool holds = true;
  bool vacuous = false;
  std::optional<std::string> witness;

  void add_quantity(std::string qname, double v) { quantities.push_back({std::move(qname), v, {}}); }
  void add_quantity(std::string qname, const Rational& v) {
    quantities.push_back({std::move(qname), v.convert_to<double>(), v.str()});
  }
  void add_check(std::string cname, const Rational& lhs, const Rational& rhs) {
    bool ok = lhs <= rhs;
    checks.push_back({std::move(cname), lhs.convert_to<double>(), rhs.convert_to<double>(), lhs.str(), rhs.str(), ok});
    holds = holds && ok;
  }
  void add_check(std::string cname, double lhs, double rhs, bool ok) {
    checks.push_back({std::move(cname), lhs, rhs, {}, {}, ok});
    holds = holds && ok;
  }
  void fail_with(std::string w) {
    if (!witness) witness = std::move(w);
  }

  const Quantity* quantity(const std::string& qname) const {
    for (const auto& q : quantities)
      if (q.name == qname) return &q;
    return nullptr;
  }
};

namespace detail {

template <std::size_t W>
void require_three_graph(const BasicHypergraph<W>& h, const char* what) {
  if (h.r() != 3) throw PreconditionError(std::string(what) + " requires a 3-graph, got r = " + std::to_string(h.r()));
}

// |L(u, v)| for all u, v in [n] of a 3-graph, from the vertex link graphs.
template <std::size_t W>
std::vector<std::vector<int>> pair_link_sizes(const BasicHypergraph<W>& h) {
  auto lk = link_adjacency(h);
  const int n = h.n();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1));
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u; v <= n; ++v) {
      int twice = 0;
      for (Vertex a = 1; a <= n; ++a) twice += (lk[u][a] & lk[v][a]).size();
      out[u][v] = out[v][u] = twice / 2;
    }
  return out;
}

}  // namespace detail

template <std::size_t W>
using CancellativeWitness = std::array<BasicVertexSet<W>, 3>;

// First (A, B, C) with A, B, C distinct edges and A xor B inside C, or nothing.
// For r = 3 only pairs sharing two vertices can violate, so the scan runs over
// shadow pairs T and co-neighbours u, v of T. `general_r` enables the
// definition-level scan for other uniformities.
template <std::size_t W>
std::optional<CancellativeWitness<W>> find_cancellative_violation(const BasicHypergraph<W>& h,
                                                                   bool general_r = false) {
  if (h.r() != 3) {
    if (!general_r) throw PreconditionError("cancellativity check requires r = 3 (enable general_r for other r)");
    const auto& es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = 0; j < es.size(); ++j) {
        if (i == j) continue;
        auto d = es[i] ^ es[j];
        for (std::size_t k = 0; k < es.size(); ++k)
          if (k != i && k != j && d.is_subset_of(es[k])) return CancellativeWitness<W>{es[i], es[j], es[k]};
      }
    return std::nullopt;
  }
  // lk[u][v] lists the third vertices of edges through {u, v}
  auto lk = link_adjacency(h);
  for (const auto& t : shadow(h)) {
    auto members = lk[t.first()][t.last()].members();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto& third = lk[members[i]][members[j]];
        if (third.empty()) continue;
        auto a = t, b = t;
        a.insert(members[i]);
        b.insert(members[j]);
        return CancellativeWitness<W>{a, b, BasicVertexSet<W>{members[i], members[j], third.first()}};
      }
  }
  return std::nullopt;
}

template <std::size_t W>
bool is_cancellative(const BasicHypergraph<W>& h, bool general_r = false) {
  return !find_cancellative_violation(h, general_r).has_value();
}

// Every N(T), T in the shadow, is an independent set of H.
template <std::size_t W>
bool neighborhoods_independent(const BasicHypergraph<W>& h) {
  detail::require_three_graph(h, "neighborhoods_independent");
  auto lk = link_adjacency(h);
  std::vector<BasicVertexSet<W>> covered(static_cast<std::size_t>(h.n()) + 1);
  for (Vertex a = 1; a <= h.n(); ++a)
    for (Vertex b = 1; b <= h.n(); ++b)
      if (!lk[a][b].empty()) covered[a].insert(b);
  for (const auto& t : shadow(h)) {
    auto nt = lk[t.first()][t.last()];
    bool ok = true;
    nt.for_each([&](Vertex x) {
      if (covered[x].intersects(nt)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

// Vertex v and a triangle {x, y, z} of L(v), if some link graph has a triangle.
template <std::size_t W>
std::optional<std::array<Vertex, 4>> find_link_triangle(const BasicHypergraph<W>& h) {
  detail::require_three_graph(h, "links_triangle_free");
  auto lk = link_adjacency(h);
  for (Vertex v = 1; v <= h.n(); ++v)
    for (Vertex x = 1; x <= h.n(); ++x) {
      std::optional<std::array<Vertex, 4>> hit;
      lk[v][x].for_each([&](Vertex y) {
        if (hit || y <= x) return;
        auto common = lk[v][x] & lk[v][y];
        if (!common.empty()) hit = std::array<Vertex, 4>{v, x, y, common.first()};
      });
      if (hit) return hit;
    }
  return std::nullopt;
}

template <std::size_t W>
bool links_triangle_free(const BasicHypergraph<W>& h) {
  return !find_link_triangle(h).has_value();
}

// K^{(r)}_{ell+1}-freeness via the auxiliary graph: H is free iff its pair
// coverage graph has no K_{ell+1}.
template <std::size_t W>
bool is_k_free(const BasicHypergraph<W>& h, int ell) {
  if (ell < h.r()) throw PreconditionError("is_k_free needs ell >= r");
  return !contains_clique(auxiliary_graph(h), ell + 1);
}

// Same predicate by direct embedding of every family member.
inline bool is_k_free_direct(const Hypergraph& h, const ForbiddenFamily& family) {
  for (const auto& f : family.members)
    if (f.r() == h.r() && is_subgraph(f, h)) return false;
  return true;
}

inline bool predicate_holds(const Predicate& p, const Hypergraph& h) {
  switch (p.kind) {
    case PredicateKind::Cancellative: return is_cancellative(h);
    case PredicateKind::KFree: return is_k_free(h, p.ell);
    case PredicateKind::TriangleFree:
      if (h.r() != 2) throw PreconditionError("triangle-free predicate needs r = 2");
      return !contains_clique(h, 3);
    case PredicateKind::Custom: return (*p.custom)(h);
  }
  return false;
}

// Chain (k_i / C(ell, i))^{1/i} non-increasing in i for a K_{ell+1}-free graph.
template <std::size_t W>
CertificateReport fisher_ryan_certificate(const BasicHypergraph<W>& g, int ell) {
  if (g.r() != 2) throw PreconditionError("fisher-ryan certificate needs a graph (r = 2)");
  if (ell < 1) throw PreconditionError("need ell >= 1");
  if (auto k = find_clique(g, ell + 1)) {
    std::string s;
    for (auto v : *k) s += (s.empty() ? "" : ",") + std::to_string(v);
    throw PreconditionError("graph contains K_" + std::to_string(ell + 1) + " on {" + s + "}");
  }
  CertificateReport rep;
  rep.name = "fisher-ryan";
  auto counts = clique_counts(g);
  std::vector<long double> c(static_cast<std::size_t>(ell) + 1, 0.0L);
  for (int i = 1; i <= ell; ++i) {
    std::uint64_t k = i < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(i)] : 0;
    auto denom = static_cast<long double>(detail::binomial(ell, i));
    c[static_cast<std::size_t>(i)] =
        k == 0 ? 0.0L : std::pow(static_cast<long double>(k) / denom, 1.0L / static_cast<long double>(i));
    rep.add_quantity("k_" + std::to_string(i), Rational(k));
  }
  for (int i = 1; i <= ell; ++i)
    rep.add_quantity("c_" + std::to_string(i), static_cast<double>(c[static_cast<std::size_t>(i)]));
  for (int i = ell; i >= 2; --i) {
    auto hi = c[static_cast<std::size_t>(i)];
    auto lo = c[static_cast<std::size_t>(i - 1)];
    bool ok = hi <= lo * (1.0L + kChainTolerance);
    rep.add_check("c_" + std::to_string(i) + " <= c_" + std::to_string(i - 1), static_cast<double>(hi),
                  static_cast<double>(lo), ok);
    if (!ok) rep.fail_with("c_" + std::to_string(i) + " exceeds c_" + std::to_string(i - 1));
  }
  return rep;
}

// #{T in shadow : u, v in N(T)} = |L(u, v)| for every ordered pair, u = v included.
template <std::size_t W>
CertificateReport link_count_identity(const BasicHypergraph<W>& h) {
  detail::require_three_graph(h, "link_count_identity");
  CertificateReport rep;
  rep.name = "link-count-identity";
  const int n = h.n();
  std::vector<std::vector<long long>> lhs(static_cast<std::size_t>(n) + 1,
                                          std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
  auto sh = shadow(h);
  for (const auto& t : sh) {
    auto nt = neighborhood(h, t);
    nt.for_each([&](Vertex u) { nt.for_each([&](Vertex v) { ++lhs[u][v]; }); });
  }
  auto rhs = detail::pair_link_sizes(h);
  long long mismatches = 0;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = 1; v <= n; ++v)
      if (lhs[u][v] != rhs[u][v]) {
        ++mismatches;
        rep.fail_with("(" + std::to_string(u) + "," + std::to_string(v) + "): " + std::to_string(lhs[u][v]) +
                      " sets vs |L| = " + std::to_string(rhs[u][v]));
      }
  rep.vacuous = sh.empty();
  rep.add_quantity("n", Rational(n));
  rep.add_quantity("|H|", Rational(h.size()));
  rep.add_quantity("|dH|", Rational(sh.size()));
  rep.add_quantity("pairs_checked", Rational(static_cast<long long>(n) * n));
  rep.add_check("mismatches <= 0", Rational(mismatches), Rational(0));
  return rep;
}

namespace detail {

template <std::size_t W>
void require_cancellative(const BasicHypergraph<W>& h, const char* what) {
  require_three_graph(h, what);
  if (auto w = find_cancellative_violation(h))
    throw PreconditionError(std::string(what) + " requires a cancellative 3-graph; violated by " + (*w)[0].to_string() +
                            " " + (*w)[1].to_string() + " " + (*w)[2].to_string());
}

template <std::size_t W>
void require_cancellative_nonempty(const BasicHypergraph<W>& h, const char* what) {
  require_cancellative(h, what);
  if (h.empty()) throw PreconditionError(std::string(what) + " requires a nonempty shadow");
}

// Empty shadow: nothing to sum, reported as a vacuous pass.
template <std::size_t W>
CertificateReport vacuous_report(const char* name, const BasicHypergraph<W>& h) {
  CertificateReport rep;
  rep.name = name;
  rep.vacuous = true;
  rep.add_quantity("n", Rational(h.n()));
  rep.add_quantity("|H|", Rational(0));
  rep.add_quantity("|dH|", Rational(0));
  return rep;
}

}  // namespace detail

// sum over T in the shadow and (u, v) in N(T)^2 of 1/|L(u, v)|  <=  n^2 - 2|dH|.
template <std::size_t W>
CertificateReport reciprocal_link_certificate(const BasicHypergraph<W>& h) {
  detail::require_cancellative(h, "reciprocal-link");
  if (h.empty()) return detail::vacuous_report("reciprocal-link", h);
  CertificateReport rep;
  rep.name = "reciprocal-link";
  const int n = h.n();
  auto sizes = detail::pair_link_sizes(h);
  auto sh = shadow(h);
  std::map<int, long long> histogram;
  for (const auto& t : sh) {
    auto nt = neighborhood(h, t);
    nt.for_each([&](Vertex u) { nt.for_each([&](Vertex v) { ++histogram[sizes[u][v]]; }); });
  }
  Rational lhs = 0;
  for (auto [size, count] : histogram) lhs += Rational(count, size);
  Rational rhs = Rational(static_cast<long long>(n) * n) - Rational(2 * static_cast<long long>(sh.size()));
  rep.add_quantity("n", Rational(n));
  rep.add_quantity("|H|", Rational(h.size()));
  rep.add_quantity("|dH|", Rational(sh.size()));
  rep.add_quantity("lhs", lhs);
  rep.add_quantity("rhs", rhs);
  rep.add_check("reciprocal link sum <= n^2 - 2|dH|", lhs, rhs);
  if (!rep.holds) rep.fail_with("lhs " + lhs.str() + " exceeds rhs " + rhs.str());
  return rep;
}

// The chain from the reciprocal-link inequality to |H| <= (n/3)^3:
//   sum_T 4 d(T)^2/(n - d(T))^2 <= n^2 - 2|dH|          (Mantel on L(u, v))
//   4 z^2 |dH| <= n^2 - 2|dH|                            (Jensen)
//   |dH| <= n^2 / (2(2z^2 + 1)),  |H| <= z n^3 / (6(z+1)(2z^2+1)),  |H| <= (n/3)^3
// with z = (3|H|/|dH|) / (n - 3|H|/|dH|). Also records |H| <= t_3(n, 3).
template <std::size_t W>
CertificateReport edge_count_chain_certificate(const BasicHypergraph<W>& h) {
  detail::require_cancellative(h, "edge-count-chain");
  if (h.empty()) return detail::vacuous_report("edge-count-chain", h);
  CertificateReport rep;
  rep.name = "edge-count-chain";
  const int n = h.n();
  auto sh = shadow(h);
  const Rational edges(h.size());
  const Rational shadow_size(sh.size());
  const Rational nn(n);
  const Rational avg = 3 * edges / shadow_size;
  const Rational z = avg / (nn - avg);

  Rational mantel_sum = 0;
  for (const auto& t : sh) {
    Rational d(degree(h, t));
    mantel_sum += 4 * d * d / ((nn - d) * (nn - d));
  }
  const Rational budget = nn * nn - 2 * shadow_size;
  const Rational jensen = 4 * z * z * shadow_size;
  const Rational shadow_bound = nn * nn / (2 * (2 * z * z + 1));
  const Rational edge_bound = z * nn * nn * nn / (6 * (z + 1) * (2 * z * z + 1));
  const Rational cube = nn * nn * nn / 27;
  const Rational turan(turan_count(std::max(n, 3), 3, 3));

  rep.add_quantity("n", nn);
  rep.add_quantity("|H|", edges);
  rep.add_quantity("|dH|", shadow_size);
  rep.add_quantity("z", z);
  rep.add_quantity("n^2 - 2|dH|", budget);
  rep.add_quantity("t_3(n,3)", turan);
  rep.add_check("sum_T 4 d^2/(n-d)^2 <= n^2 - 2|dH|", mantel_sum, budget);
  rep.add_check("4 z^2 |dH| <= sum_T 4 d^2/(n-d)^2", jensen, mantel_sum);
  rep.add_check("|dH| <= n^2/(2(2z^2+1))", shadow_size, shadow_bound);
  rep.add_check("|H| <= z n^3/(6(z+1)(2z^2+1))", edges, edge_bound);
  rep.add_check("|H| <= (n/3)^3", edges, cube);
  rep.add_check("|H| <= t_3(n,3)", edges, turan);
  if (!rep.holds)
    for (const auto& c : rep.checks)
      if (!c.holds) rep.fail_with("violated: " + c.name + " (" + c.lhs_exact + " > " + c.rhs_exact + ")");
  return rep;
}

// For T in the shadow and (u, v) in N(T)^2: V(L(u, v)) misses N(T), L(u, v) is
// triangle-free, and |L(u, v)| <= ((n - d(T))/2)^2.
template <std::size_t W>
CertificateReport mantel_link_bound(const BasicHypergraph<W>& h) {
  detail::require_cancellative(h, "mantel_link_bound");
  CertificateReport rep;
  rep.name = "mantel-link-bound";
  const int n = h.n();
  auto lk = link_adjacency(h);
  auto sh = shadow(h);

  struct PairLink {
    bool ready = false;
    BasicVertexSet<W> support;
    bool triangle_free = true;
    long long size = 0;
  };
  std::vector<PairLink> cache(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1));
  auto pair_link = [&](Vertex u, Vertex v) -> const PairLink& {
    auto& pl = cache[static_cast<std::size_t>(u) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(v)];
    if (pl.ready) return pl;
    pl.ready = true;
    std::vector<BasicVertexSet<W>> adj(static_cast<std::size_t>(n) + 1);
    long long twice = 0;
    for (Vertex a = 1; a <= n; ++a) {
      adj[a] = lk[u][a] & lk[v][a];
      if (!adj[a].empty()) pl.support.insert(a);
      twice += adj[a].size();
    }
    pl.size = twice / 2;
    for (Vertex a = 1; a <= n && pl.triangle_free; ++a)
      adj[a].for_each([&](Vertex b) {
        if (b > a && adj[a].intersects(adj[b])) pl.triangle_free = false;
      });
    return pl;
  };

  long long checked = 0, overlap = 0, triangles = 0, over_bound = 0;
  Rational max_ratio = 0;
  for (const auto& t : sh) {
    auto nt = lk[t.first()][t.last()];
    const long long room = n - nt.size();
    nt.for_each([&](Vertex u) {
      nt.for_each([&](Vertex v) {
        const auto& pl = pair_link(u, v);
        ++checked;
        std::string at = "T=" + t.to_string() + " (u,v)=(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (pl.support.intersects(nt)) {
          ++overlap;
          rep.fail_with(at + ": V(L) meets N(T)");
        }
        if (!pl.triangle_free) {
          ++triangles;
          rep.fail_with(at + ": L(u,v) has a triangle");
        }
        if (4 * pl.size > room * room) {
          ++over_bound;
          rep.fail_with(at + ": |L| = " + std::to_string(pl.size) + " exceeds ((n-d)/2)^2");
        }
        if (room > 0) max_ratio = std::max(max_ratio, Rational(4 * pl.size, room * room));
      });
    });
  }
  rep.vacuous = sh.empty();
  rep.add_quantity("n", Rational(n));
  rep.add_quantity("|dH|", Rational(sh.size()));
  rep.add_quantity("pairs_checked", Rational(checked));
  rep.add_quantity("max |L|/((n-d)/2)^2", max_ratio);
  rep.add_check("V(L(u,v)) meets N(T): count <= 0", Rational(overlap), Rational(0));
  rep.add_check("L(u,v) with triangle: count <= 0", Rational(triangles), Rational(0));
  rep.add_check("|L(u,v)| > ((n-d)/2)^2: count <= 0", Rational(over_bound), Rational(0));
  return rep;
}

}  // namespace turanlab
