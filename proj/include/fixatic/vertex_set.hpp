#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixatic {

using Vertex = int;

/// Largest vertex count any graph in this library may have.
inline constexpr int kMaxVertices = 64;

/// A set of vertices drawn from {0..63}, stored as one machine word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  /// {0, ..., n-1}.
  static constexpr VertexSet first(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet single(Vertex v) {
    check(v);
    return VertexSet(std::uint64_t{1} << v);
  }
  template <class Range>
  static VertexSet from(const Range& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  bool contains(Vertex v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1U) != 0; }
  void insert(Vertex v) {
    check(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(Vertex v) {
    if (v >= 0 && v < 64) bits_ &= ~(std::uint64_t{1} << v);
  }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  Vertex front() const { return std::countr_zero(bits_); }
  bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  bool operator==(const VertexSet&) const = default;

  /// Lexicographic order on the ascending member lists ({0,5} < {1}).
  friend bool lex_less(VertexSet a, VertexSet b) {
    while (!a.empty() && !b.empty()) {
      Vertex x = a.front();
      Vertex y = b.front();
      if (x != y) return x < y;
      a.erase(x);
      b.erase(y);
    }
    return a.empty() && !b.empty();
  }

  std::string to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (Vertex v : *this) {
      if (!first_member) out += ',';
      out += std::to_string(v);
      first_member = false;
    }
    return out + "}";
  }

 private:
  static void check(Vertex v) {
    if (v < 0 || v >= 64) throw std::out_of_range("vertex " + std::to_string(v) + " outside 0..63");
  }

  std::uint64_t bits_ = 0;
};

}  // namespace fixatic
