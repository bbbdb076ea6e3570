#pragma once

#include <algorithm>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "fixatic/error.hpp"
#include "fixatic/fixatic.hpp"
#include "fixatic/fixing.hpp"
#include "fixatic/graph.hpp"
#include "fixatic/packing.hpp"

namespace fixatic {

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) : n_(g.order()), dist_(static_cast<std::size_t>(n_ * n_), -1) {
    for (Vertex s = 0; s < n_; ++s) {
      std::deque<Vertex> queue{s};
      at(s, s) = 0;
      while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
          if (at(s, v) < 0) {
            at(s, v) = at(s, u) + 1;
            queue.push_back(v);
          }
        }
      }
    }
    if (std::find(dist_.begin(), dist_.end(), -1) != dist_.end()) throw DisconnectedGraphError();
  }

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return dist_[index(u, v)]; }

  /// c_W(v): distances from v to the members of W, in W's order.
  std::vector<int> code(Vertex v, std::span<const Vertex> w) const {
    std::vector<int> out;
    out.reserve(w.size());
    for (Vertex x : w) out.push_back((*this)(v, x));
    return out;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u * n_ + v); }
  int& at(Vertex u, Vertex v) { return dist_[index(u, v)]; }

  int n_;
  std::vector<int> dist_;
};

inline DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

/// True iff the codes c_W(v) are pairwise distinct. Order of W is irrelevant.
inline bool is_locating_set(const DistanceMatrix& d, std::span<const Vertex> w) {
  if (w.empty()) return d.order() <= 1;
  for (Vertex x : w)
    if (x < 0 || x >= d.order()) throw std::out_of_range("vertex " + std::to_string(x) + " out of range");
  std::vector<std::vector<int>> codes;
  codes.reserve(static_cast<std::size_t>(d.order()));
  for (Vertex v = 0; v < d.order(); ++v) codes.push_back(d.code(v, w));
  std::sort(codes.begin(), codes.end());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

inline bool is_locating_set(const Graph& g, std::span<const Vertex> w) {
  return is_locating_set(DistanceMatrix(g), w);
}

inline constexpr int kLocaticCap = 12;

/// Locating sets as a transversal problem: W locates iff, for every pair
/// u != v, it contains a vertex at different distances from u and v.
class LocatingSets {
 public:
  explicit LocatingSets(const Graph& g) : n_(g.order()) {
    const DistanceMatrix d(g);
    std::vector<VertexSet> pairs;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        VertexSet separating;
        for (Vertex w = 0; w < n_; ++w)
          if (d(u, w) != d(v, w)) separating.insert(w);
        pairs.push_back(separating);
      }
    }
    separators_ = detail::minimal_members(std::move(pairs));
  }

  bool is_locating(VertexSet w) const {
    return std::all_of(separators_.begin(), separators_.end(), [&](VertexSet e) { return e.intersects(w); });
  }

  /// loc(G), by increasing-cardinality subset search.
  int location_number() const {
    for (int k = 0; k <= n_; ++k) {
      bool found = false;
      for_each_subset(k, [&](VertexSet s) {
        if (!found && is_locating(s)) found = true;
      });
      if (found) return k;
    }
    return n_;
  }

  std::vector<VertexSet> minimal_locating_sets() const { return detail::minimal_transversals(separators_); }

 private:
  template <class Visit>
  void for_each_subset(int k, Visit&& visit) const {
    std::function<void(int, Vertex, VertexSet)> choose = [&](int left, Vertex from, VertexSet acc) {
      if (left == 0) {
        visit(acc);
        return;
      }
      for (Vertex v = from; v <= n_ - left; ++v) choose(left - 1, v + 1, acc | VertexSet::single(v));
    };
    choose(k, 0, VertexSet{});
  }

  int n_;
  std::vector<VertexSet> separators_;
};

inline int location_number(const Graph& g) { return LocatingSets(g).location_number(); }

struct LocaticResult {
  int locatic = 0;
  std::vector<VertexSet> witness;
};

/// L(G): the most classes a partition of V(G) into locating sets can have.
inline LocaticResult locatic_partition(const Graph& g, int cap = kLocaticCap) {
  if (g.order() > cap)
    throw CapacityError("locatic number is capped at n = " + std::to_string(cap) + ", got n = " +
                        std::to_string(g.order()));
  const LocatingSets sets(g);
  if (g.order() <= 1) {
    LocaticResult out;
    if (g.order() == 1) out = {1, {g.vertices()}};
    return out;
  }
  const auto minimal = sets.minimal_locating_sets();
  Packing best = max_disjoint_packing(minimal, g.vertices(), g.order());
  return {best.count, detail::complete_partition(std::move(best.sets), g.vertices())};
}

inline int locatic_number(const Graph& g, int cap = kLocaticCap) { return locatic_partition(g, cap).locatic; }

}  // namespace fixatic
