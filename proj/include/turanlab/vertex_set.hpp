#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace turanlab {

using Vertex = int;

// Subset of [n] stored as a fixed-width bitmask. Label v occupies bit v-1.
// Words = 1 covers n <= 64; wider instantiations are the fallback for larger n.
template <std::size_t Words>
class BasicVertexSet {
public:
  static constexpr int kCapacity = static_cast<int>(64 * Words);

  constexpr BasicVertexSet() = default;

  constexpr BasicVertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static constexpr BasicVertexSet range(Vertex first, Vertex last) {
    BasicVertexSet s;
    for (Vertex v = first; v <= last; ++v) s.insert(v);
    return s;
  }

  static constexpr BasicVertexSet from_word(std::uint64_t w) {
    BasicVertexSet s;
    s.words_[0] = w;
    return s;
  }

  constexpr void insert(Vertex v) {
    check(v);
    words_[(v - 1) >> 6] |= std::uint64_t{1} << ((v - 1) & 63);
  }
  constexpr void erase(Vertex v) {
    check(v);
    words_[(v - 1) >> 6] &= ~(std::uint64_t{1} << ((v - 1) & 63));
  }
  constexpr bool contains(Vertex v) const {
    if (v < 1 || v > kCapacity) return false;
    return (words_[(v - 1) >> 6] >> ((v - 1) & 63)) & 1U;
  }

  constexpr int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  constexpr bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, or 0 when empty.
  constexpr Vertex first() const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i]) return static_cast<Vertex>(64 * i + std::countr_zero(words_[i]) + 1);
    return 0;
  }
  constexpr Vertex last() const {
    for (std::size_t i = Words; i-- > 0;)
      if (words_[i]) return static_cast<Vertex>(64 * i + 63 - std::countl_zero(words_[i]) + 1);
    return 0;
  }

  constexpr bool is_subset_of(const BasicVertexSet& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  constexpr bool intersects(const BasicVertexSet& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  constexpr BasicVertexSet& operator&=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr BasicVertexSet& operator|=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr BasicVertexSet& operator^=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // Set difference.
  constexpr BasicVertexSet& operator-=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend constexpr BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
  friend constexpr BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
  friend constexpr BasicVertexSet operator^(BasicVertexSet a, const BasicVertexSet& b) { return a ^= b; }
  friend constexpr BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;

  // Numeric order of the bitmask (highest word most significant), i.e. colex order
  // on sets of equal size.
  friend constexpr std::strong_ordering operator<=>(const BasicVertexSet& a, const BasicVertexSet& b) {
    for (std::size_t i = Words; i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    return std::strong_ordering::equal;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Vertex>(64 * i + std::countr_zero(w) + 1));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  constexpr const std::array<std::uint64_t, Words>& words() const { return words_; }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](Vertex v) {
      if (!first_item) s += ',';
      s += std::to_string(v);
      first_item = false;
    });
    return s + "}";
  }

private:
  static constexpr void check(Vertex v) {
    if (v < 1 || v > kCapacity) throw std::out_of_range("vertex label " + std::to_string(v) + " outside set capacity");
  }

  std::array<std::uint64_t, Words> words_{};
};

using VertexSet = BasicVertexSet<1>;
using WideVertexSet = BasicVertexSet<4>;

template <std::size_t Words>
struct VertexSetHash {
  std::size_t operator()(const BasicVertexSet<Words>& s) const { return s.hash(); }
};

// Ordered pair (u, v); u == v allowed, in which case L(u, u) is the link of {u}.
struct OrderedPair {
  Vertex first = 0;
  Vertex second = 0;
  friend constexpr auto operator<=>(const OrderedPair&, const OrderedPair&) = default;
};

}  // namespace turanlab
