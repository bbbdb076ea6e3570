#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fixatic/graph.hpp"

namespace fixatic::families {

// Labelling convention: root or spine vertices first, then the legs in
// order (each leg listed outward from its attachment point), leaf blocks last.

namespace detail {

inline void require(bool ok, std::string_view family, const std::string& what) {
  if (!ok) throw std::invalid_argument(std::string(family) + ": " + what);
}

/// Appends a path of `length` new vertices hanging from `anchor`.
inline void attach_leg(Graph& g, Vertex anchor, Vertex& next, int length) {
  Vertex prev = anchor;
  for (int i = 0; i < length; ++i) {
    g.add_edge(prev, next);
    prev = next++;
  }
}

}  // namespace detail

inline Graph path(int n) {
  detail::require(n >= 1, "path", "needs n >= 1");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  detail::require(n >= 3, "cycle", "needs n >= 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete(int n) {
  detail::require(n >= 1, "complete", "needs n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph empty(int n) { return Graph(n); }

/// K_{a,b}: part A is 0..a-1.
inline Graph complete_bipartite(int a, int b) {
  detail::require(a >= 1 && b >= 1, "complete_bipartite", "needs a, b >= 1");
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

/// K_{1,k}, centre 0.
inline Graph star(int k) {
  detail::require(k >= 1, "star", "needs k >= 1");
  return complete_bipartite(1, k);
}

/// Cay(Z_n; S): i ~ i + s (mod n). S must avoid 0 and be closed under negation.
inline Graph circulant(int n, std::span<const int> connection) {
  detail::require(n >= 1, "circulant", "needs n >= 1");
  std::set<int> s;
  for (int x : connection) {
    detail::require(x > 0 && x < n, "circulant", "connection set element " + std::to_string(x) + " not in 1..n-1");
    s.insert(x);
  }
  for (int x : s)
    detail::require(s.contains(n - x), "circulant", "connection set is not closed under negation (" +
                                                         std::to_string(x) + " without " + std::to_string(n - x) + ")");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v)
    for (int x : s) {
      Vertex u = (v + x) % n;
      if (u != v) g.add_edge(v, u);
    }
  return g;
}

/// Edge uv (u = 0, v = 1); two legs of order t-1 at u, then t legs of order t-1 at v.
/// fix = F_xt = t. Order 2 + (t+2)(t-1).
inline Graph broom_pair(int t) {
  detail::require(t >= 2, "broom_pair", "needs t >= 2");
  Graph g(2 + (t + 2) * (t - 1));
  g.add_edge(0, 1);
  Vertex next = 2;
  for (int i = 0; i < 2; ++i) detail::attach_leg(g, 0, next, t - 1);
  for (int j = 0; j < t; ++j) detail::attach_leg(g, 1, next, t - 1);
  return g;
}

/// Root 0 with t+1 legs of order t. fix = t, F_xt = t+1.
inline Graph spider_dan1(int t) {
  detail::require(t >= 2, "spider_dan1", "needs t >= 2");
  Graph g(1 + (t + 1) * t);
  Vertex next = 1;
  for (int i = 0; i <= t; ++i) detail::attach_leg(g, 0, next, t);
  return g;
}

/// Spine path 0..t-3, then two leaves per spine vertex. fix + F_xt = t.
inline Graph caterpillar2(int t) {
  detail::require(t >= 3, "caterpillar2", "needs t >= 3");
  const int spine = t - 2;
  Graph g(3 * spine);
  for (Vertex v = 0; v + 1 < spine; ++v) g.add_edge(v, v + 1);
  Vertex next = spine;
  for (Vertex v = 0; v < spine; ++v) {
    g.add_edge(v, next++);
    g.add_edge(v, next++);
  }
  return g;
}

/// Root 0 with t+1 legs of order 2t-1. fix = t, F_xt = 2t.
inline Graph spider_rslt(int t) {
  detail::require(t >= 1, "spider_rslt", "needs t >= 1");
  Graph g(1 + (t + 1) * (2 * t - 1));
  Vertex next = 1;
  for (int i = 0; i <= t; ++i) detail::attach_leg(g, 0, next, 2 * t - 1);
  return g;
}

/// Edge uv (u = 0, v = 1) with pendant leaves: (t+4)/2 at u and (t+2)/2 at v
/// for even t, ceil(t/2)+1 at each end for odd t. fix - F_xt = t.
inline Graph double_broom(int t) {
  detail::require(t >= 3, "double_broom", "needs t >= 3");
  const int at_u = t % 2 == 0 ? (t + 4) / 2 : (t + 1) / 2 + 1;
  const int at_v = t % 2 == 0 ? (t + 2) / 2 : (t + 1) / 2 + 1;
  Graph g(2 + at_u + at_v);
  g.add_edge(0, 1);
  Vertex next = 2;
  for (int i = 0; i < at_u; ++i) g.add_edge(0, next++);
  for (int i = 0; i < at_v; ++i) g.add_edge(1, next++);
  return g;
}

/// K_4 without the edge {2, 3}: 0 and 1 have degree 3.
inline Graph k4_minus_e() {
  Graph g = complete(4);
  g.remove_edge(2, 3);
  return g;
}

/// P_7: automorphism group {id, reversal}, one fixed vertex, (fix, F_xt, Π_t) = (1, 6, 6).
inline Graph example1_standin() { return path(7); }

struct FamilyInfo {
  std::string_view name;
  std::string_view params;
};

inline constexpr FamilyInfo kFamilies[] = {
    {"path", "n"},
    {"cycle", "n"},
    {"complete", "n"},
    {"empty", "n"},
    {"star", "k"},
    {"complete_bipartite", "a b"},
    {"circulant", "n s1 s2 ..."},
    {"broom_pair", "t"},
    {"spider_dan1", "t"},
    {"caterpillar2", "t"},
    {"spider_rslt", "t"},
    {"double_broom", "t"},
    {"k4_minus_e", ""},
    {"example1_standin", ""},
};

/// Builds a family member by name; throws std::invalid_argument on unknown
/// names and bad parameters.
inline Graph generate(std::string_view family, std::span<const int> params) {
  auto arity = [&](std::size_t want) {
    detail::require(params.size() == want, family,
                    "expects " + std::to_string(want) + " parameter(s), got " + std::to_string(params.size()));
  };
  if (family == "path") return arity(1), path(params[0]);
  if (family == "cycle") return arity(1), cycle(params[0]);
  if (family == "complete") return arity(1), complete(params[0]);
  if (family == "empty") return arity(1), empty(params[0]);
  if (family == "star") return arity(1), star(params[0]);
  if (family == "complete_bipartite") return arity(2), complete_bipartite(params[0], params[1]);
  if (family == "circulant") {
    detail::require(!params.empty(), family, "expects n followed by the connection set");
    return circulant(params[0], params.subspan(1));
  }
  if (family == "broom_pair") return arity(1), broom_pair(params[0]);
  if (family == "spider_dan1") return arity(1), spider_dan1(params[0]);
  if (family == "caterpillar2") return arity(1), caterpillar2(params[0]);
  if (family == "spider_rslt") return arity(1), spider_rslt(params[0]);
  if (family == "double_broom") return arity(1), double_broom(params[0]);
  if (family == "k4_minus_e") return arity(0), k4_minus_e();
  if (family == "example1_standin") return arity(0), example1_standin();
  throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

inline Graph generate(std::string_view family, std::initializer_list<int> params) {
  return generate(family, std::span<const int>(params.begin(), params.size()));
}

}  // namespace fixatic::families
