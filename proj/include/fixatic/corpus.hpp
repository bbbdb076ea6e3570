#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fixatic/error.hpp"
#include "fixatic/graph.hpp"

namespace fixatic {

inline constexpr int kScanMaxOrder = 7;
inline constexpr int kCanonicalMaxOrder = 8;

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> vertex_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
  return pairs;
}

inline void check_scan_order(int n) {
  if (n < 1) throw std::invalid_argument("graph scans need n >= 1, got " + std::to_string(n));
  if (n > kScanMaxOrder)
    throw CapacityError("exhaustive scans are capped at n = " + std::to_string(kScanMaxOrder) + ", got n = " +
                        std::to_string(n));
}

}  // namespace detail

/// Calls visit(g) for every labelled connected graph on n vertices, in
/// increasing order of the edge-subset mask (pairs ordered by (v, u), u < v).
template <class Visit>
void for_each_connected_graph(int n, Visit&& visit) {
  detail::check_scan_order(n);
  const auto pairs = detail::vertex_pairs(n);
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) {
        rows[static_cast<std::size_t>(pairs[k].first)] |= std::uint64_t{1} << pairs[k].second;
        rows[static_cast<std::size_t>(pairs[k].second)] |= std::uint64_t{1} << pairs[k].first;
      }
    }
    std::uint64_t reached = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (Vertex v : VertexSet(frontier)) next |= rows[static_cast<std::size_t>(v)];
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached != VertexSet::first(n).bits()) continue;
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) g.add_edge(pairs[k].first, pairs[k].second);
    visit(g);
  }
}

/// All labelled connected graphs on n vertices (n <= 7), in scan order.
inline std::vector<Graph> scan_connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

/// Adjacency bits of the lexicographically smallest relabelling; equal for
/// isomorphic graphs. Tries every permutation, so n is capped.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder)
    throw CapacityError("canonical codes are capped at n = " + std::to_string(kCanonicalMaxOrder));
  const auto pairs = detail::vertex_pairs(n);
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (g.adjacent(p[static_cast<std::size_t>(pairs[k].first)], p[static_cast<std::size_t>(pairs[k].second)]))
        code |= std::uint64_t{1} << k;
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

/// One representative (the first in scan order) of each isomorphism class
/// of connected graphs on n vertices.
inline std::vector<Graph> connected_graphs_up_to_isomorphism(int n) {
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) {
    if (seen.insert(canonical_code(g)).second) out.push_back(g);
  });
  return out;
}

}  // namespace fixatic
