#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixatic/bigcount.hpp"
#include "fixatic/error.hpp"
#include "fixatic/permutation.hpp"

namespace fixatic {

/// Orders up to this bound may be listed element by element.
inline constexpr std::uint64_t kMaterializationCap = 1'000'000;

/// A permutation group on {0..degree-1}, held as its generators plus a
/// stabilizer chain (deterministic Schreier-Sims). Order, membership, orbits
/// and pointwise stabilizers come from the chain; the explicit element list
/// is produced on request when the order is at most kMaterializationCap.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  explicit PermutationGroup(int degree, std::vector<Permutation> generators = {})
      : PermutationGroup(degree, std::move(generators), {}) {}

  static PermutationGroup trivial(int degree) { return PermutationGroup(degree); }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool is_trivial() const { return generators_.empty(); }

  BigCount order() const {
    BigCount out = 1;
    for (const Level& level : levels_) out *= level.orbit.size();
    return out;
  }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    Permutation g = p;
    for (const Level& level : levels_) {
      const auto& rep = level.transversal[static_cast<std::size_t>(g(level.point))];
      if (!rep) return false;
      g = compose(inverse(*rep), g);
    }
    return g.is_identity();
  }

  /// Orbits ordered by smallest member, members ascending.
  std::vector<std::vector<Vertex>> orbits() const {
    std::vector<Vertex> parent(static_cast<std::size_t>(degree_));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<Vertex(Vertex)> find = [&](Vertex v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (const Permutation& g : generators_) {
      for (Vertex v = 0; v < degree_; ++v) {
        Vertex a = find(v);
        Vertex b = find(g(v));
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    std::vector<std::vector<Vertex>> out;
    std::vector<int> slot(static_cast<std::size_t>(degree_), -1);
    for (Vertex v = 0; v < degree_; ++v) {
      Vertex root = find(v);
      if (slot[static_cast<std::size_t>(root)] < 0) {
        slot[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(v);
    }
    return out;
  }

  std::vector<Vertex> orbit_of(Vertex v) const {
    check_point(v);
    for (auto& orbit : orbits())
      if (std::find(orbit.begin(), orbit.end(), v) != orbit.end()) return orbit;
    return {v};
  }

  /// Elements fixing every point of `points`. Rebuilds the chain with
  /// `points` as the base prefix and keeps the generators below it.
  PermutationGroup pointwise_stabilizer(std::span<const Vertex> points) const {
    for (Vertex v : points) check_point(v);
    if (is_trivial()) return *this;
    std::vector<Vertex> prefix(points.begin(), points.end());
    std::sort(prefix.begin(), prefix.end());
    prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
    PermutationGroup rebased(degree_, strong_generators(), prefix);
    std::vector<Permutation> below;
    for (std::size_t i = prefix.size(); i < rebased.levels_.size(); ++i)
      for (const Permutation& g : rebased.levels_[i].generators) below.push_back(g);
    return PermutationGroup(degree_, std::move(below));
  }
  PermutationGroup pointwise_stabilizer(VertexSet points) const {
    auto v = points.to_vector();
    return pointwise_stabilizer(std::span<const Vertex>(v));
  }

  /// Every element, sorted by image sequence. Throws CapacityError above the cap.
  std::vector<Permutation> elements() const {
    if (order() > kMaterializationCap)
      throw CapacityError("group of order " + order().str() + " exceeds the materialization cap");
    std::vector<Permutation> out;
    std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t level, const Permutation& prefix) {
      if (level == levels_.size()) {
        out.push_back(prefix);
        return;
      }
      for (Vertex x : levels_[level].orbit)
        walk(level + 1, compose(prefix, *levels_[level].transversal[static_cast<std::size_t>(x)]));
    };
    walk(0, Permutation::identity(degree_));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Generators of every chain level; together they generate the group.
  std::vector<Permutation> strong_generators() const {
    std::vector<Permutation> out;
    for (const Level& level : levels_)
      for (const Permutation& g : level.generators) out.push_back(g);
    return out;
  }

 private:
  struct Level {
    Vertex point = 0;
    std::vector<Permutation> generators;
    std::vector<std::optional<Permutation>> transversal;  // [x] maps point to x
    std::vector<Vertex> orbit;
  };

  PermutationGroup(int degree, std::vector<Permutation> generators, std::span<const Vertex> base_prefix)
      : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative permutation degree");
    for (Permutation& g : generators) {
      if (g.degree() != degree)
        throw std::invalid_argument("generator degree " + std::to_string(g.degree()) + " != group degree " +
                                    std::to_string(degree));
      if (!g.is_identity() && std::find(generators_.begin(), generators_.end(), g) == generators_.end())
        generators_.push_back(std::move(g));
    }
    if (generators_.empty()) return;

    std::vector<Vertex> base(base_prefix.begin(), base_prefix.end());
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (Vertex v : base) used[static_cast<std::size_t>(v)] = true;
    for (Vertex v = 0; v < degree; ++v)
      if (!used[static_cast<std::size_t>(v)]) base.push_back(v);

    levels_.resize(static_cast<std::size_t>(degree));
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      Level& level = levels_[i];
      level.point = base[i];
      level.transversal.assign(static_cast<std::size_t>(degree), std::nullopt);
      level.transversal[static_cast<std::size_t>(level.point)] = Permutation::identity(degree);
      level.orbit.push_back(level.point);
    }
    for (const Permutation& g : generators_) sift(0, g);
    // Trailing levels with trivial orbits carry no information.
    while (!levels_.empty() && levels_.back().orbit.size() == 1 && levels_.back().generators.empty())
      levels_.pop_back();
  }

  void check_point(Vertex v) const {
    if (v < 0 || v >= degree_)
      throw std::out_of_range("point " + std::to_string(v) + " outside 0.." + std::to_string(degree_ - 1));
  }

  void sift(std::size_t i, Permutation g) {
    for (; i < levels_.size(); ++i) {
      const auto& rep = levels_[i].transversal[static_cast<std::size_t>(g(levels_[i].point))];
      if (!rep) {
        add_generator(i, std::move(g));
        return;
      }
      g = compose(inverse(*rep), g);
    }
  }

  // g fixes the first `i` base points. It generates the i-th stabilizer and,
  // with it, every larger stabilizer above it in the chain.
  void add_generator(std::size_t i, Permutation g) {
    levels_[i].generators.push_back(g);
    // Deepest level first, so the orbit point that made g necessary is
    // recorded before the shallower levels produce more Schreier generators.
    for (std::size_t j = i + 1; j-- > 0;) {
      const std::vector<Vertex> orbit = levels_[j].orbit;
      for (Vertex x : orbit) extend(j, compose(g, *levels_[j].transversal[static_cast<std::size_t>(x)]));
    }
  }

  // g lies in the j-th stabilizer; either it reaches a new orbit point or
  // yields a Schreier generator that is sifted one level down.
  void extend(std::size_t j, const Permutation& g) {
    const Vertex x = g(levels_[j].point);
    auto& slot = levels_[j].transversal[static_cast<std::size_t>(x)];
    if (slot) {
      Permutation h = compose(inverse(*slot), g);
      if (!h.is_identity()) sift(j + 1, std::move(h));
      return;
    }
    slot = g;
    levels_[j].orbit.push_back(x);
    for (std::size_t k = j; k < levels_.size(); ++k) {
      for (std::size_t m = 0; m < levels_[k].generators.size(); ++m) {
        Permutation s = levels_[k].generators[m];
        extend(j, compose(s, g));
      }
    }
  }

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

}  // namespace fixatic
