#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixatic/autom.hpp"
#include "fixatic/error.hpp"
#include "fixatic/graph.hpp"
#include "fixatic/perm_group.hpp"

namespace fixatic {

struct FixingWitness {
  int size = 0;        // fix(G)
  VertexSet witness;   // one fixing set of that size
};

namespace detail {

inline void check_subset(VertexSet s, int n) {
  if (!s.is_subset_of(VertexSet::first(n)))
    throw std::out_of_range("vertex set " + s.to_string() + " is not inside 0.." + std::to_string(n - 1));
}

/// Keeps only the inclusion-minimal members; output sorted by size, then lexicographically.
inline std::vector<VertexSet> minimal_members(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets)
    if (std::none_of(kept.begin(), kept.end(), [&](VertexSet k) { return k.is_subset_of(s); })) kept.push_back(s);
  return kept;
}

/// All inclusion-minimal sets meeting every member of `edges`.
inline std::vector<VertexSet> minimal_transversals(std::span<const VertexSet> edges) {
  std::vector<VertexSet> out;
  auto minimal = [&](VertexSet s) {
    for (Vertex v : s) {
      const VertexSet rest = s - VertexSet::single(v);
      if (std::all_of(edges.begin(), edges.end(), [&](VertexSet e) { return e.intersects(rest); })) return false;
    }
    return true;
  };
  std::function<void(VertexSet, VertexSet)> grow = [&](VertexSet chosen, VertexSet banned) {
    auto open = std::find_if(edges.begin(), edges.end(), [&](VertexSet e) { return !e.intersects(chosen); });
    if (open == edges.end()) {
      if (minimal(chosen)) out.push_back(chosen);
      return;
    }
    for (Vertex v : *open - banned) {
      grow(chosen | VertexSet::single(v), banned);
      banned.insert(v);
    }
  };
  grow(VertexSet{}, VertexSet{});
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

}  // namespace detail

/// The fixing sets of a group seen as a hypergraph transversal problem: F is
/// fixing iff it meets the support of every non-identity element, and only
/// the inclusion-minimal supports matter. Requires a materializable group.
class FixingSets {
 public:
  explicit FixingSets(const PermutationGroup& group) : degree_(group.degree()) {
    std::vector<VertexSet> supports;
    for (const Permutation& p : group.elements())
      if (!p.is_identity()) supports.push_back(p.support());
    supports_ = detail::minimal_members(std::move(supports));
    minimal_ = detail::minimal_transversals(supports_);
  }

  int degree() const { return degree_; }

  bool is_fixing(VertexSet s) const {
    return std::all_of(supports_.begin(), supports_.end(), [&](VertexSet e) { return e.intersects(s); });
  }

  /// Inclusion-minimal supports of non-identity elements.
  const std::vector<VertexSet>& minimal_supports() const { return supports_; }

  /// Inclusion-minimal fixing sets, by size then lexicographically.
  const std::vector<VertexSet>& minimal_fixing_sets() const { return minimal_; }

  /// fix(G); 0 for the trivial group.
  int min_size() const { return minimal_.empty() ? 0 : minimal_.front().size(); }

 private:
  int degree_ = 0;
  std::vector<VertexSet> supports_;
  std::vector<VertexSet> minimal_;
};

inline bool is_fixing_set(const PermutationGroup& group, VertexSet f) {
  detail::check_subset(f, group.degree());
  return group.pointwise_stabilizer(f).is_trivial();
}

inline bool is_fixing_set(const Graph& g, VertexSet f) {
  detail::check_subset(f, g.order());
  return is_fixing_set(automorphism_group(g), f);
}

namespace detail {

// Minimum base size of the group. Points in one orbit have conjugate
// stabilizers, so the smallest member of each non-trivial orbit suffices.
class FixingNumberSearch {
 public:
  explicit FixingNumberSearch(const PermutationGroup& root) : root_(root) {}

  FixingWitness run() {
    FixingWitness out;
    out.size = solve(root_, VertexSet{});
    PermutationGroup group = root_;
    VertexSet chosen;
    while (!group.is_trivial()) {
      const Vertex v = memo_.at(chosen.bits()).choice;
      chosen.insert(v);
      group = group.pointwise_stabilizer(VertexSet::single(v));
    }
    out.witness = chosen;
    return out;
  }

 private:
  struct Entry {
    int depth;
    Vertex choice;
  };

  int solve(const PermutationGroup& group, VertexSet chosen) {
    if (group.is_trivial()) return 0;
    if (auto it = memo_.find(chosen.bits()); it != memo_.end()) return it->second.depth;
    Entry best{std::numeric_limits<int>::max(), -1};
    for (const auto& orbit : group.orbits()) {
      if (orbit.size() < 2) continue;
      const Vertex v = orbit.front();
      const int depth = 1 + solve(group.pointwise_stabilizer(VertexSet::single(v)), chosen | VertexSet::single(v));
      if (depth < best.depth) best = {depth, v};
    }
    memo_[chosen.bits()] = best;
    return best.depth;
  }

  const PermutationGroup& root_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

}  // namespace detail

inline FixingWitness fixing_number(const PermutationGroup& group) {
  return detail::FixingNumberSearch(group).run();
}

inline FixingWitness fixing_number(const Graph& g) { return fixing_number(automorphism_group(g)); }

inline constexpr int kMinimumFixingSetsCap = 16;

/// Every fixing set of size fix(G), in lexicographic order.
inline std::vector<VertexSet> minimum_fixing_sets(const Graph& g, int cap = kMinimumFixingSetsCap) {
  if (g.order() > cap)
    throw CapacityError("minimum fixing set enumeration is capped at n = " + std::to_string(cap));
  const PermutationGroup group = automorphism_group(g);
  const FixingSets sets(group);
  const int k = fixing_number(group).size;
  const int n = g.order();
  std::vector<VertexSet> out;
  std::function<void(int, int, VertexSet)> choose = [&](int slot, Vertex from, VertexSet acc) {
    if (slot == k) {
      if (sets.is_fixing(acc)) out.push_back(acc);
      return;
    }
    for (Vertex v = from; v <= n - (k - slot); ++v) choose(slot + 1, v + 1, acc | VertexSet::single(v));
  };
  choose(0, 0, VertexSet{});
  return out;
}

/// Vertices that form a fixing set on their own.
inline VertexSet fixing_vertices(const PermutationGroup& group) {
  VertexSet out;
  if (group.is_trivial()) return VertexSet::first(group.degree());
  for (Vertex v = 0; v < group.degree(); ++v)
    if (group.pointwise_stabilizer(VertexSet::single(v)).is_trivial()) out.insert(v);
  return out;
}

inline VertexSet fixing_vertices(const Graph& g) { return fixing_vertices(automorphism_group(g)); }

}  // namespace fixatic
