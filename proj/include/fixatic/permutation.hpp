#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixatic/vertex_set.hpp"

namespace fixatic {

/// A bijection on {0..n-1}; `p(v)` is the image of v.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (Vertex v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[static_cast<std::size_t>(v)])
        throw std::invalid_argument("image list is not a bijection");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    Permutation p;
    p.images_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) p.images_[static_cast<std::size_t>(v)] = v;
    return p;
  }

  /// Swaps u and v, fixes everything else.
  static Permutation transposition(int n, Vertex u, Vertex v) {
    Permutation p = identity(n);
    std::swap(p.images_.at(static_cast<std::size_t>(u)), p.images_.at(static_cast<std::size_t>(v)));
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t v = 0; v < images_.size(); ++v)
      if (images_[v] != static_cast<Vertex>(v)) return false;
    return true;
  }

  /// Vertices moved by the permutation. Degree must be <= 64.
  VertexSet support() const {
    VertexSet moved;
    for (std::size_t v = 0; v < images_.size(); ++v)
      if (images_[v] != static_cast<Vertex>(v)) moved.insert(static_cast<Vertex>(v));
    return moved;
  }

  bool fixes_pointwise(VertexSet points) const { return !support().intersects(points); }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(images_[i]);
    }
    return out + "]";
  }

 private:
  struct Trusted {};
  Permutation(std::vector<Vertex> images, Trusted) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

  std::vector<Vertex> images_;
};

/// (p ∘ q)(v) = p(q(v)): q is applied first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("composing permutations of degree " + std::to_string(p.degree()) +
                                " and " + std::to_string(q.degree()));
  std::vector<Vertex> out(static_cast<std::size_t>(p.degree()));
  for (Vertex v = 0; v < p.degree(); ++v) out[static_cast<std::size_t>(v)] = p(q(v));
  return Permutation(std::move(out), Permutation::Trusted{});
}

inline Permutation inverse(const Permutation& p) {
  std::vector<Vertex> out(static_cast<std::size_t>(p.degree()));
  for (Vertex v = 0; v < p.degree(); ++v) out[static_cast<std::size_t>(p(v))] = v;
  return Permutation(std::move(out), Permutation::Trusted{});
}

}  // namespace fixatic
