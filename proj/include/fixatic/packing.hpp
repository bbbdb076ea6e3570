#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "fixatic/vertex_set.hpp"

namespace fixatic {

struct Packing {
  int count = 0;
  std::vector<VertexSet> sets;  // pairwise disjoint, ordered by smallest member
};

/// Maximum number of pairwise disjoint members of `family` inside `universe`.
/// Branches on the smallest uncovered vertex (used by one of its sets, or by
/// none) and prunes with |free| / smallest-set-size. Stops early at `ceiling`.
inline Packing max_disjoint_packing(std::span<const VertexSet> family, VertexSet universe, int ceiling) {
  std::vector<VertexSet> sets;
  for (VertexSet s : family)
    if (!s.empty() && s.is_subset_of(universe)) sets.push_back(s);
  Packing best;
  if (sets.empty() || ceiling <= 0) return best;
  int smallest = universe.size();
  for (VertexSet s : sets) smallest = std::min(smallest, s.size());

  std::vector<VertexSet> current;
  std::function<void(VertexSet)> search = [&](VertexSet free) {
    if (best.count >= ceiling) return;
    const int count = static_cast<int>(current.size());
    if (count + free.size() / smallest <= best.count) return;
    Vertex pivot = -1;
    for (Vertex v : free) {
      if (std::any_of(sets.begin(), sets.end(), [&](VertexSet s) { return s.contains(v) && s.is_subset_of(free); })) {
        pivot = v;
        break;
      }
    }
    if (pivot < 0) {
      if (count > best.count) {
        best.count = count;
        best.sets = current;
      }
      return;
    }
    for (VertexSet s : sets) {
      if (!s.contains(pivot) || !s.is_subset_of(free)) continue;
      current.push_back(s);
      search(free - s);
      current.pop_back();
      if (best.count >= ceiling) return;
    }
    search(free - VertexSet::single(pivot));
  };
  search(universe);
  std::sort(best.sets.begin(), best.sets.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
  return best;
}

/// Visits every unordered partition of `universe` into exactly `classes`
/// blocks, each accepted by `member` (a monotone predicate: supersets of
/// members are members). Each new block is anchored at the smallest
/// unassigned vertex, so every partition is seen once.
template <class Member, class Visit>
void for_each_partition_into(VertexSet universe, int classes, int min_block, Member&& member, Visit&& visit) {
  if (classes <= 0) {
    if (universe.empty() && classes == 0) visit(std::span<const VertexSet>{});
    return;
  }
  min_block = std::max(min_block, 1);
  std::vector<VertexSet> blocks;
  std::function<void(VertexSet, int)> place = [&](VertexSet rest, int left) {
    if (left == 1) {
      if (member(rest)) {
        blocks.push_back(rest);
        visit(std::span<const VertexSet>(blocks));
        blocks.pop_back();
      }
      return;
    }
    const Vertex anchor = rest.front();
    const VertexSet pool = rest - VertexSet::single(anchor);
    // Enumerate subsets of pool as the block's other members.
    std::uint64_t sub = pool.bits();
    for (;;) {
      const VertexSet block = VertexSet(sub) | VertexSet::single(anchor);
      const VertexSet remaining = rest - block;
      if (block.size() >= min_block && remaining.size() >= (left - 1) * min_block && member(block) &&
          member(remaining)) {
        blocks.push_back(block);
        place(remaining, left - 1);
        blocks.pop_back();
      }
      if (sub == 0) break;
      sub = (sub - 1) & pool.bits();
    }
  };
  if (universe.size() >= classes * min_block) place(universe, classes);
}

}  // namespace fixatic
