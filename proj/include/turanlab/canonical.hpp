#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

inline constexpr int kDefaultCanonicalCeiling = 12;

// Total-order key for the isomorphism class of a hypergraph: the sorted edge
// masks under the minimizing relabeling, flattened to words.
struct CanonicalForm {
  int n = 0;
  int r = 0;
  std::vector<std::uint64_t> code;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

template <std::size_t W>
class Canonizer {
public:
  using Set = BasicVertexSet<W>;

  explicit Canonizer(const BasicHypergraph<W>& h) : h_(h), n_(h.n()) {
    incident_.resize(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < h.edges().size(); ++i)
      h.edges()[i].for_each([&](Vertex v) { incident_[static_cast<std::size_t>(v - 1)].push_back(i); });
  }

  std::pair<std::vector<std::uint64_t>, std::vector<Vertex>> run() {
    std::vector<int> colors(static_cast<std::size_t>(n_), 0);
    search(colors);
    return {best_code_, best_labels_};
  }

private:
  // Iterated color refinement; colors are re-ranked by sorted signature so the
  // result depends only on the isomorphism type of (h, colors).
  void refine(std::vector<int>& colors) const {
    int classes = count_classes(colors);
    while (true) {
      std::vector<std::pair<std::vector<int>, int>> sigs(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) {
        std::vector<std::vector<int>> around;
        for (auto ei : incident_[static_cast<std::size_t>(v)]) {
          std::vector<int> others;
          h_.edges()[ei].for_each([&](Vertex u) {
            if (u - 1 != v) others.push_back(colors[static_cast<std::size_t>(u - 1)]);
          });
          std::sort(others.begin(), others.end());
          around.push_back(std::move(others));
        }
        std::sort(around.begin(), around.end());
        std::vector<int> sig{colors[static_cast<std::size_t>(v)], static_cast<int>(around.size())};
        for (auto& o : around) {
          sig.push_back(-1);
          sig.insert(sig.end(), o.begin(), o.end());
        }
        sigs[static_cast<std::size_t>(v)] = {std::move(sig), v};
      }
      auto sorted = sigs;
      std::sort(sorted.begin(), sorted.end());
      std::vector<std::vector<int>> distinct;
      for (auto& s : sorted)
        if (distinct.empty() || distinct.back() != s.first) distinct.push_back(s.first);
      for (int v = 0; v < n_; ++v)
        colors[static_cast<std::size_t>(v)] = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), sigs[static_cast<std::size_t>(v)].first) -
            distinct.begin());
      int now = static_cast<int>(distinct.size());
      if (now == classes) return;
      classes = now;
    }
  }

  static int count_classes(const std::vector<int>& colors) {
    auto c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  bool twins(int a, int b) const {
    Vertex va = a + 1, vb = b + 1;
    for (const auto& e : h_.edges()) {
      bool ia = e.contains(va), ib = e.contains(vb);
      if (ia == ib) continue;
      auto swapped = e;
      swapped.erase(ia ? va : vb);
      swapped.insert(ia ? vb : va);
      if (!h_.contains(swapped)) return false;
    }
    return true;
  }

  void search(std::vector<int> colors) {
    refine(colors);
    int target = -1;
    std::vector<int> members;
    std::vector<int> size(static_cast<std::size_t>(n_), 0);
    for (int c : colors) ++size[static_cast<std::size_t>(c)];
    for (int c = 0; c < n_; ++c)
      if (size[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (int v = 0; v < n_; ++v)
      if (colors[static_cast<std::size_t>(v)] == target) members.push_back(v);
    std::vector<int> tried;
    for (int v : members) {
      bool redundant = false;
      for (int t : tried)
        if (twins(t, v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(v);
      std::vector<int> next(colors.size());
      for (int u = 0; u < n_; ++u) {
        int c = colors[static_cast<std::size_t>(u)];
        next[static_cast<std::size_t>(u)] = 2 * c + ((c == target && u != v) ? 1 : 0);
      }
      search(std::move(next));
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<Set> relabeled;
    relabeled.reserve(h_.size());
    for (const auto& e : h_.edges()) {
      Set s;
      e.for_each([&](Vertex v) { s.insert(colors[static_cast<std::size_t>(v - 1)] + 1); });
      relabeled.push_back(s);
    }
    std::sort(relabeled.begin(), relabeled.end());
    std::vector<std::uint64_t> code;
    code.reserve(relabeled.size() * W);
    for (const auto& s : relabeled)
      for (std::size_t i = W; i-- > 0;) code.push_back(s.words()[i]);
    if (!have_best_ || code < best_code_) {
      have_best_ = true;
      best_code_ = std::move(code);
      best_labels_.assign(static_cast<std::size_t>(n_), 0);
      for (int v = 0; v < n_; ++v) best_labels_[static_cast<std::size_t>(v)] = colors[static_cast<std::size_t>(v)] + 1;
    }
  }

  const BasicHypergraph<W>& h_;
  int n_;
  std::vector<std::vector<std::size_t>> incident_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_code_;
  std::vector<Vertex> best_labels_;
};

}  // namespace detail

// Relabeling old vertex v -> labels[v - 1] that produces the canonical form.
template <std::size_t W>
std::vector<Vertex> canonical_labeling(const BasicHypergraph<W>& h, int ceiling = kDefaultCanonicalCeiling) {
  if (h.n() > ceiling)
    throw PreconditionError("canonical form limited to n <= " + std::to_string(ceiling) + ", got n = " +
                            std::to_string(h.n()));
  return detail::Canonizer<W>(h).run().second;
}

template <std::size_t W>
CanonicalForm canonical_form(const BasicHypergraph<W>& h, int ceiling = kDefaultCanonicalCeiling) {
  if (h.n() > ceiling)
    throw PreconditionError("canonical form limited to n <= " + std::to_string(ceiling) + ", got n = " +
                            std::to_string(h.n()));
  return CanonicalForm{h.n(), h.r(), detail::Canonizer<W>(h).run().first};
}

// Image of h under v -> labels[v - 1].
template <std::size_t W>
BasicHypergraph<W> relabel(const BasicHypergraph<W>& h, const std::vector<Vertex>& labels) {
  std::vector<BasicVertexSet<W>> edges;
  edges.reserve(h.size());
  for (const auto& e : h.edges()) {
    BasicVertexSet<W> s;
    e.for_each([&](Vertex v) { s.insert(labels.at(static_cast<std::size_t>(v - 1))); });
    edges.push_back(s);
  }
  return BasicHypergraph<W>(h.n(), h.r(), std::move(edges));
}

template <std::size_t W>
BasicHypergraph<W> canonical_representative(const BasicHypergraph<W>& h, int ceiling = kDefaultCanonicalCeiling) {
  return relabel(h, canonical_labeling(h, ceiling));
}

template <std::size_t W>
bool isomorphic(const BasicHypergraph<W>& a, const BasicHypergraph<W>& b, int ceiling = kDefaultCanonicalCeiling) {
  if (a.n() != b.n() || a.r() != b.r() || a.size() != b.size()) return false;
  return canonical_form(a, ceiling) == canonical_form(b, ceiling);
}

}  // namespace turanlab
