#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "turanlab/hypergraph.hpp"

namespace turanlab {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Text format: '#' comment lines, a header line "n r", then one edge per line as
// r space-separated labels in 1..n. Duplicate edges are an error.
struct EdgeListText {
  int n = 0;
  int r = 0;
  std::vector<std::vector<Vertex>> edges;
};

inline EdgeListText read_edge_list(std::istream& in) {
  EdgeListText out;
  std::string line;
  bool header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long x = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(x);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
      }
    }
    if (!header) {
      if (nums.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": header must be 'n r'");
      if (nums[0] < 0 || nums[1] < 1) throw ParseError("line " + std::to_string(lineno) + ": bad header values");
      out.n = static_cast<int>(nums[0]);
      out.r = static_cast<int>(nums[1]);
      header = true;
      continue;
    }
    if (static_cast<int>(nums.size()) != out.r)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(out.r) + " labels");
    std::vector<Vertex> e;
    for (auto x : nums) {
      if (x < 1 || x > out.n)
        throw ParseError("line " + std::to_string(lineno) + ": label " + std::to_string(x) + " outside 1.." +
                         std::to_string(out.n));
      e.push_back(static_cast<Vertex>(x));
    }
    out.edges.push_back(std::move(e));
  }
  if (!header) throw ParseError("missing 'n r' header");
  return out;
}

template <std::size_t W>
BasicHypergraph<W> to_hypergraph(const EdgeListText& text) {
  if (text.n > BasicVertexSet<W>::kCapacity)
    throw ParseError("n = " + std::to_string(text.n) + " exceeds capacity " +
                     std::to_string(BasicVertexSet<W>::kCapacity));
  BasicHypergraph<W> h(text.n, text.r);
  for (const auto& labels : text.edges) {
    BasicVertexSet<W> e;
    for (auto v : labels) e.insert(v);
    if (e.size() != text.r) throw ParseError("edge with repeated label: " + e.to_string());
    if (!h.add_edge(e)) throw ParseError("duplicate edge " + e.to_string());
  }
  return h;
}

template <std::size_t W = 1>
BasicHypergraph<W> parse_hypergraph(std::istream& in) {
  return to_hypergraph<W>(read_edge_list(in));
}

template <std::size_t W = 1>
BasicHypergraph<W> parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph<W>(in);
}

template <std::size_t W>
void write_hypergraph(std::ostream& out, const BasicHypergraph<W>& h) {
  out << h.n() << ' ' << h.r() << '\n';
  for (const auto& e : h.edges()) {
    bool first = true;
    e.for_each([&](Vertex v) {
      if (!first) out << ' ';
      out << v;
      first = false;
    });
    out << '\n';
  }
}

template <std::size_t W>
std::string format_hypergraph(const BasicHypergraph<W>& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

}  // namespace turanlab
