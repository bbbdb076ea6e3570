#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fixatic/autom.hpp"
#include "fixatic/bigcount.hpp"
#include "fixatic/error.hpp"
#include "fixatic/fixing.hpp"
#include "fixatic/graph.hpp"
#include "fixatic/packing.hpp"

namespace fixatic {

enum class PartitionDefect {
  kNone,
  kEmptyClass,
  kOutOfRange,
  kOverlap,
  kNotCovering,
  kClassRejected,  // a class is not a fixing (or locating) set
};

struct PartitionCheck {
  PartitionDefect defect = PartitionDefect::kNone;
  int class_index = -1;  // offending class, when there is one

  explicit operator bool() const { return defect == PartitionDefect::kNone; }
};

inline const char* to_string(PartitionDefect d) {
  switch (d) {
    case PartitionDefect::kNone: return "ok";
    case PartitionDefect::kEmptyClass: return "empty class";
    case PartitionDefect::kOutOfRange: return "vertex out of range";
    case PartitionDefect::kOverlap: return "classes overlap";
    case PartitionDefect::kNotCovering: return "classes do not cover the vertex set";
    case PartitionDefect::kClassRejected: return "class fails the membership test";
  }
  return "?";
}

namespace detail {

template <class Member>
PartitionCheck check_partition(int n, std::span<const VertexSet> classes, Member&& member) {
  const VertexSet all = VertexSet::first(n);
  VertexSet seen;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const int at = static_cast<int>(i);
    if (classes[i].empty()) return {PartitionDefect::kEmptyClass, at};
    if (!classes[i].is_subset_of(all)) return {PartitionDefect::kOutOfRange, at};
    if (classes[i].intersects(seen)) return {PartitionDefect::kOverlap, at};
    seen |= classes[i];
  }
  if (seen != all) return {PartitionDefect::kNotCovering, -1};
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (!member(classes[i])) return {PartitionDefect::kClassRejected, static_cast<int>(i)};
  return {};
}

inline void sort_classes(std::vector<VertexSet>& classes) {
  std::sort(classes.begin(), classes.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
}

/// Turns a disjoint packing into a partition by adding the uncovered
/// vertices to the first class.
inline std::vector<VertexSet> complete_partition(std::vector<VertexSet> classes, VertexSet all) {
  VertexSet covered;
  for (VertexSet c : classes) covered |= c;
  if (!classes.empty()) classes.front() |= all - covered;
  sort_classes(classes);
  return classes;
}

}  // namespace detail

struct FixaticResult {
  int fxt = 0;
  std::vector<VertexSet> witness;  // fxt classes, ordered by smallest member
  std::optional<BigCount> pi_t;    // number of maximum fixatic partitions
};

inline constexpr int kCountCap = 12;

/// Everything about one graph's fixing structure, computed once.
class FixaticAnalysis {
 public:
  explicit FixaticAnalysis(Graph g) : graph_(std::move(g)), group_(automorphism_group(graph_)) {
    fixing_ = fixing_number(group_);
    const int n = graph_.order();
    const VertexSet all = graph_.vertices();
    if (n == 0) return;
    if (fixing_.size == 0) {
      fxt_ = n;
      for (Vertex v : all) witness_.push_back(VertexSet::single(v));
      return;
    }
    if (upper_bound() <= 1) {
      fxt_ = 1;
      witness_.push_back(all);
      return;
    }
    sets_.emplace(group_);
    Packing best = max_disjoint_packing(sets_->minimal_fixing_sets(), all, upper_bound());
    fxt_ = best.count;
    witness_ = detail::complete_partition(std::move(best.sets), all);
  }

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  const PermutationGroup& group() const { return group_; }
  const FixingWitness& fixing() const { return fixing_; }
  int fix() const { return fixing_.size; }
  int fxt() const { return fxt_; }
  const std::vector<VertexSet>& witness() const { return witness_; }

  /// floor(n / fix(G)); n when the graph is rigid.
  int upper_bound() const { return fixing_.size == 0 ? order() : order() / fixing_.size; }

  bool is_fixing(VertexSet s) const {
    if (sets_) return sets_->is_fixing(s);
    return is_fixing_set(group_, s);
  }

  PartitionCheck check_partition(std::span<const VertexSet> classes) const {
    return detail::check_partition(order(), classes, [&](VertexSet s) { return is_fixing(s); });
  }

  /// Visits every fixatic partition with exactly `classes` classes.
  template <class Visit>
  void for_each_partition(int classes, Visit&& visit) const {
    for_each_partition_into(
        graph_.vertices(), classes, std::max(fix(), 1), [&](VertexSet s) { return is_fixing(s); },
        std::forward<Visit>(visit));
  }

  /// Visits every fixatic partition, of any number of classes.
  template <class Visit>
  void for_each_partition(Visit&& visit) const {
    for (int k = 1; k <= fxt_; ++k) for_each_partition(k, visit);
  }

  /// Π_t, by enumeration. Partitions are unordered.
  BigCount count_maximum(int cap = kCountCap) const {
    if (order() > cap)
      throw CapacityError("fixatic partition counting is capped at n = " + std::to_string(cap) + ", got n = " +
                          std::to_string(order()));
    if (order() == 0) return 1;
    std::uint64_t count = 0;
    for_each_partition(fxt_, [&](std::span<const VertexSet>) { ++count; });
    return count;
  }

 private:
  Graph graph_;
  PermutationGroup group_;
  FixingWitness fixing_;
  std::optional<FixingSets> sets_;
  int fxt_ = 0;
  std::vector<VertexSet> witness_;
};

inline PartitionCheck is_fixatic_partition(const Graph& g, std::span<const VertexSet> classes) {
  return FixaticAnalysis(g).check_partition(classes);
}

struct FixaticOptions {
  bool count = false;
  int count_cap = kCountCap;
};

/// F_xt(G): the largest number of classes in a partition of V(G) into fixing
/// sets. Supersets of fixing sets are fixing, so this equals the largest
/// number of pairwise disjoint minimal fixing sets.
inline FixaticResult fixatic_number(const Graph& g, FixaticOptions options = {}) {
  FixaticAnalysis analysis(g);
  FixaticResult out{analysis.fxt(), analysis.witness(), std::nullopt};
  if (options.count) out.pi_t = analysis.count_maximum(options.count_cap);
  return out;
}

inline int fixatic_upper_bound(const Graph& g) {
  const int fix = fixing_number(g).size;
  return fix == 0 ? g.order() : g.order() / fix;
}

inline BigCount count_fixatic_partitions(const Graph& g, int cap = kCountCap) {
  if (g.order() > cap)
    throw CapacityError("fixatic partition counting is capped at n = " + std::to_string(cap) + ", got n = " +
                        std::to_string(g.order()));
  return FixaticAnalysis(g).count_maximum(cap);
}

}  // namespace fixatic
