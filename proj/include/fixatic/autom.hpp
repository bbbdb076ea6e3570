#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixatic/error.hpp"
#include "fixatic/graph.hpp"
#include "fixatic/perm_group.hpp"

namespace fixatic {

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    VertexSet mapped;
    for (Vertex v : g.neighbors(u)) mapped.insert(p(v));
    if (mapped != g.neighbors(p(u))) return false;
  }
  return true;
}

namespace detail {

/// Ordered partition of the vertex set. Cell order carries meaning: it is
/// produced only from label-independent decisions, so refinement commutes
/// with relabelling.
using OrderedPartition = std::vector<VertexSet>;

/// Splits every cell by the number of neighbours its vertices have in each
/// splitter cell until the partition is equitable. Fragments replace their
/// parent in place, ordered by increasing neighbour count.
inline void refine(const Graph& g, OrderedPartition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const VertexSet splitter = cells[s];
      OrderedPartition next;
      next.reserve(cells.size() + 4);
      for (VertexSet cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<int, VertexSet> by_count;
        for (Vertex v : cell) by_count[(g.neighbors(v) & splitter).size()].insert(v);
        if (by_count.size() > 1) changed = true;
        for (auto& [count, fragment] : by_count) next.push_back(fragment);
      }
      cells = std::move(next);
    }
  }
}

/// Cell sizes plus the quotient matrix of an equitable partition; equal for
/// any two tree nodes related by an automorphism.
inline std::vector<int> signature(const Graph& g, const OrderedPartition& cells) {
  std::vector<int> sig;
  sig.reserve(cells.size() * (cells.size() + 1));
  for (VertexSet c : cells) sig.push_back(c.size());
  for (VertexSet c : cells) {
    const VertexSet nbrs = g.neighbors(c.front());
    for (VertexSet d : cells) sig.push_back((nbrs & d).size());
  }
  return sig;
}

inline std::size_t target_cell(const OrderedPartition& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].size() > 1) return i;
  return cells.size();
}

inline OrderedPartition individualize(const Graph& g, const OrderedPartition& cells, std::size_t at, Vertex v) {
  OrderedPartition child;
  child.reserve(cells.size() + 1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i == at) {
      child.push_back(VertexSet::single(v));
      child.push_back(cells[i] - VertexSet::single(v));
    } else {
      child.push_back(cells[i]);
    }
  }
  refine(g, child);
  return child;
}

/// Individualization-refinement search for generators of the automorphism
/// group of a vertex-coloured graph.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, OrderedPartition initial) : g_(g) {
    refine(g_, initial);
    path_.push_back(std::move(initial));
    for (;;) {
      const OrderedPartition& node = path_.back();
      signatures_.push_back(signature(g_, node));
      std::size_t t = target_cell(node);
      if (t == node.size()) break;
      Vertex v = node[t].front();
      chosen_.push_back(v);
      path_.push_back(individualize(g_, node, t, v));
    }
    for (VertexSet cell : path_.back()) leaf_.push_back(cell.front());
  }

  std::vector<Permutation> run() {
    std::vector<Permutation> generators;
    for (std::size_t depth = chosen_.size(); depth-- > 0;) {
      const OrderedPartition& node = path_[depth];
      const std::size_t t = target_cell(node);
      const Vertex v = chosen_[depth];
      for (Vertex w : node[t]) {
        if (w == v) continue;
        if (same_orbit(generators, v, w)) continue;
        if (auto found = find_leaf(individualize(g_, node, t, w), depth + 1)) generators.push_back(*found);
      }
    }
    return generators;
  }

 private:
  std::optional<Permutation> find_leaf(const OrderedPartition& node, std::size_t depth) {
    if (depth >= signatures_.size() || signature(g_, node) != signatures_[depth]) return std::nullopt;
    const std::size_t t = target_cell(node);
    if (t == node.size()) {
      std::vector<Vertex> images(static_cast<std::size_t>(g_.order()));
      for (std::size_t i = 0; i < node.size(); ++i) images[static_cast<std::size_t>(leaf_[i])] = node[i].front();
      Permutation p(std::move(images));
      if (is_automorphism(g_, p)) return p;
      return std::nullopt;
    }
    for (Vertex w : node[t])
      if (auto found = find_leaf(individualize(g_, node, t, w), depth + 1)) return found;
    return std::nullopt;
  }

  bool same_orbit(const std::vector<Permutation>& gens, Vertex a, Vertex b) const {
    VertexSet seen = VertexSet::single(a);
    std::vector<Vertex> stack{a};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const Permutation& p : gens) {
        Vertex y = p(x);
        if (y == b) return true;
        if (!seen.contains(y)) {
          seen.insert(y);
          stack.push_back(y);
        }
      }
    }
    return a == b;
  }

  const Graph& g_;
  std::vector<OrderedPartition> path_;
  std::vector<std::vector<int>> signatures_;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> leaf_;
};

}  // namespace detail

/// Automorphisms of g that also preserve `colors` (one colour per vertex).
inline PermutationGroup automorphism_group(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.order())
    throw std::invalid_argument("colour list length differs from the vertex count");
  if (g.order() == 0) return PermutationGroup::trivial(0);
  std::map<int, VertexSet> by_color;
  for (Vertex v = 0; v < g.order(); ++v) by_color[colors[static_cast<std::size_t>(v)]].insert(v);
  detail::OrderedPartition initial;
  for (auto& [color, cell] : by_color) initial.push_back(cell);
  detail::AutomorphismSearch search(g, std::move(initial));
  return PermutationGroup(g.order(), search.run());
}

/// Full automorphism group Γ(g), via equitable refinement with
/// individualization and backtracking.
inline PermutationGroup automorphism_group(const Graph& g) {
  std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
  return automorphism_group(g, colors);
}

inline constexpr int kBruteForceMaxOrder = 8;

/// Tests all n! permutations; for cross-checking on small graphs only.
inline PermutationGroup automorphism_group_bruteforce(const Graph& g) {
  if (g.order() > kBruteForceMaxOrder)
    throw CapacityError("brute-force automorphism search is capped at n = 8, got n = " +
                        std::to_string(g.order()));
  std::vector<Vertex> images(static_cast<std::size_t>(g.order()));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> found;
  do {
    Permutation p(images);
    if (is_automorphism(g, p)) found.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return PermutationGroup(g.order(), std::move(found));
}

/// Maximal twin classes of size >= 2, ordered by smallest member. Vertices
/// with equal closed neighbourhoods (adjacent twins) and vertices with equal
/// open neighbourhoods (non-adjacent twins) form separate classes.
inline std::vector<VertexSet> twin_sets(const Graph& g) {
  std::map<std::uint64_t, VertexSet> closed;
  std::map<std::uint64_t, VertexSet> open;
  for (Vertex v = 0; v < g.order(); ++v) {
    open[g.neighbors(v).bits()].insert(v);
    closed[(g.neighbors(v) | VertexSet::single(v)).bits()].insert(v);
  }
  std::vector<VertexSet> out;
  for (auto* groups : {&closed, &open})
    for (auto& [key, members] : *groups)
      if (members.size() >= 2) out.push_back(members);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
  return out;
}

inline bool are_twins(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return false;
  return (g.neighbors(u) - VertexSet::single(v)) == (g.neighbors(v) - VertexSet::single(u));
}

/// Vertices adjacent to every other vertex.
inline VertexSet saturated_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out.insert(v);
  return out;
}

}  // namespace fixatic
