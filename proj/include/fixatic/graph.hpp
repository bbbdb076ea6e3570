#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fixatic/vertex_set.hpp"

namespace fixatic {

/// Simple undirected graph on vertices 0..n-1 with one adjacency bit-row per
/// vertex. No loops, no multi-edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : rows_(check_order(n)) {}

  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const {
    int twice = 0;
    for (auto row : rows_) twice += VertexSet(row).size();
    return twice / 2;
  }
  VertexSet vertices() const { return VertexSet::first(order()); }

  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    return VertexSet(rows_[static_cast<std::size_t>(v)]);
  }
  int degree(Vertex v) const { return neighbors(v).size(); }

  /// Idempotent. Throws on loops and out-of-range endpoints.
  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }
  void remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  static std::size_t check_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                  std::to_string(kMaxVertices));
    return static_cast<std::size_t>(n);
  }
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                              std::to_string(order() - 1));
  }

  std::vector<std::uint64_t> rows_;
};

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

/// g1 keeps labels 0..n1-1, g2 is shifted by n1.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph out(n1 + g2.order());
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g2.edges()) out.add_edge(u + n1, v + n1);
  return out;
}

/// Disjoint union plus every edge between the two vertex blocks.
inline Graph join(const Graph& g1, const Graph& g2) {
  Graph out = disjoint_union(g1, g2);
  for (Vertex u = 0; u < g1.order(); ++u)
    for (Vertex v = 0; v < g2.order(); ++v) out.add_edge(u, g1.order() + v);
  return out;
}

inline VertexSet component_of(const Graph& g, Vertex start) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return component_of(g, 0) == g.vertices();
}

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v : keep & g.vertices()) index[static_cast<std::size_t>(v)] = next++;
  Graph out(next);
  for (auto [u, v] : g.edges()) {
    int a = index[static_cast<std::size_t>(u)];
    int b = index[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) out.add_edge(a, b);
  }
  return out;
}

/// G - B.
inline Graph remove_vertices(const Graph& g, VertexSet removed) {
  return induced_subgraph(g, g.vertices() - removed);
}

}  // namespace fixatic
