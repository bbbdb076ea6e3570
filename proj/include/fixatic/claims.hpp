#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fixatic/autom.hpp"
#include "fixatic/corpus.hpp"
#include "fixatic/counting.hpp"
#include "fixatic/families.hpp"
#include "fixatic/fixatic.hpp"
#include "fixatic/graph_io.hpp"
#include "fixatic/locating.hpp"
#include "fixatic/parallel.hpp"

namespace fixatic {

using Json = nlohmann::json;

/// One thing a claim is checked on: usually a single graph, a pair for the
/// join results, or a whole family sequence.
struct Instance {
  std::vector<Graph> graphs;
  std::string label;
  std::vector<int> params;
};

struct Evaluation {
  bool in_scope = false;
  bool holds = true;
  Json observed = Json::object();
  std::string expected;
  bool documented = false;  // failure is a known discrepancy, not a bug
};

struct Counterexample {
  std::string graph6;  // graphs of the instance, comma separated
  std::string label;
  std::vector<int> params;
  Json observed;
  std::string expected;
  bool documented = false;
};

struct ClaimReport {
  std::string claim;
  std::string statement;
  std::size_t tested = 0;
  std::vector<Counterexample> counterexamples;

  bool pass() const { return counterexamples.empty(); }
  std::string verdict() const { return pass() ? "PASS" : "FAIL"; }
  bool expected_failure() const {
    return !pass() && std::all_of(counterexamples.begin(), counterexamples.end(),
                                  [](const Counterexample& c) { return c.documented; });
  }
  bool unexpected_failure() const { return !pass() && !expected_failure(); }
};

inline constexpr int kVerifyMaxOrder = 6;

/// Thread-safe memo of per-graph results, shared by all claims in a run.
class AnalysisCache {
 public:
  const FixaticAnalysis& analysis(const Graph& g) {
    return get(analyses_, g, [](const Graph& h) { return std::make_shared<const FixaticAnalysis>(h); });
  }

  int locatic(const Graph& g) {
    return get(locatics_, g, [](const Graph& h) { return std::make_shared<const int>(locatic_number(h)); });
  }

  int fix(const Graph& g) { return analysis(g).fix(); }
  int fxt(const Graph& g) { return analysis(g).fxt(); }

 private:
  template <class T, class Make>
  const T& get(std::map<std::vector<std::uint64_t>, std::shared_ptr<const T>>& table, const Graph& g, Make make) {
    std::vector<std::uint64_t> key;
    key.reserve(static_cast<std::size_t>(g.order()) + 1);
    key.push_back(static_cast<std::uint64_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) key.push_back(g.neighbors(v).bits());
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = table.find(key); it != table.end()) return *it->second;
    }
    auto value = make(g);
    std::lock_guard<std::mutex> lock(mutex_);
    return *table.emplace(std::move(key), std::move(value)).first->second;
  }

  std::mutex mutex_;
  std::map<std::vector<std::uint64_t>, std::shared_ptr<const FixaticAnalysis>> analyses_;
  std::map<std::vector<std::uint64_t>, std::shared_ptr<const int>> locatics_;
};

struct Claim {
  std::string_view id;
  std::string_view statement;
  std::function<Evaluation(const Instance&, AnalysisCache&)> evaluate;
  std::function<std::vector<Instance>(int max_n)> corpus;  // used by verify
  std::function<std::vector<Instance>(int n)> scan;        // used by scan --n
};

/// A BigCount as a JSON number when it fits in 64 bits, else as a string.
inline Json count_json(const BigCount& c) {
  if (c <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(c);
  return c.str();
}

inline std::string instance_graph6(const Instance& instance) {
  std::string out;
  for (std::size_t i = 0; i < instance.graphs.size(); ++i) {
    if (i) out += ',';
    out += encode_graph6(instance.graphs[i]);
  }
  return out;
}

namespace claims_detail {

using families::generate;

inline bool symmetric_connected(const Graph& g, AnalysisCache& cache) {
  return g.order() >= 2 && is_connected(g) && !cache.analysis(g).group().is_trivial();
}

inline const Graph* single(const Instance& in) { return in.graphs.size() == 1 ? &in.graphs.front() : nullptr; }

inline Instance wrap(Graph g, std::string label, std::vector<int> params = {}) {
  return Instance{{std::move(g)}, std::move(label), std::move(params)};
}

inline std::vector<Instance> scan_instances(int n) {
  std::vector<Instance> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(wrap(g, "scan n=" + std::to_string(n))); });
  return out;
}

inline std::vector<Instance> scans_up_to(int max_n, int from = 2) {
  std::vector<Instance> out;
  for (int n = from; n <= std::min(max_n, kScanMaxOrder); ++n) {
    auto part = scan_instances(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

inline std::string family_label(std::string_view name, std::initializer_list<int> params) {
  std::string label(name);
  for (int p : params) label += " " + std::to_string(p);
  return label;
}

inline Instance family(std::string_view name, std::initializer_list<int> params) {
  return wrap(generate(name, params), family_label(name, params), std::vector<int>(params));
}

/// Named graphs of order at most 10 used alongside the exhaustive scans.
inline std::vector<Instance> family_instances() {
  std::vector<Instance> out;
  for (int n = 2; n <= 10; ++n) out.push_back(family("path", {n}));
  for (int n = 3; n <= 10; ++n) out.push_back(family("cycle", {n}));
  for (int n = 2; n <= 7; ++n) out.push_back(family("complete", {n}));
  for (int k = 2; k <= 7; ++k) out.push_back(family("star", {k}));
  for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}})
    out.push_back(family("complete_bipartite", {a, b}));
  out.push_back(family("k4_minus_e", {}));
  out.push_back(family("example1_standin", {}));
  out.push_back(family("broom_pair", {2}));
  out.push_back(family("spider_dan1", {2}));
  for (int t = 3; t <= 5; ++t) out.push_back(family("caterpillar2", {t}));
  for (int t = 1; t <= 2; ++t) out.push_back(family("spider_rslt", {t}));
  for (int t = 3; t <= 4; ++t) out.push_back(family("double_broom", {t}));
  out.push_back(family("circulant", {7, 1, 2, 5, 6}));
  out.push_back(family("circulant", {8, 1, 4, 7}));
  return out;
}

inline std::vector<Instance> generic_corpus(int max_n) {
  auto out = scans_up_to(max_n);
  auto extra = family_instances();
  out.insert(out.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  return out;
}

inline std::vector<Instance> iso_reduced(int from, int to) {
  std::vector<Instance> out;
  for (int n = from; n <= std::min(to, kScanMaxOrder); ++n)
    for (Graph& g : connected_graphs_up_to_isomorphism(n)) out.push_back(wrap(std::move(g), "n=" + std::to_string(n)));
  return out;
}

/// Ordered pairs (G1, G2) of connected graphs up to isomorphism, orders 1..max.
inline std::vector<Instance> join_pairs(int max_order) {
  const auto graphs = iso_reduced(1, max_order);
  std::vector<Instance> out;
  for (const Instance& a : graphs)
    for (const Instance& b : graphs)
      out.push_back(Instance{{a.graphs.front(), b.graphs.front()}, "join pair", {}});
  return out;
}

inline constexpr int kJoinMaxFactorOrder = 4;

inline Evaluation in_scope(bool holds, Json observed, std::string expected, bool documented = false) {
  Evaluation e;
  e.in_scope = true;
  e.holds = holds;
  e.observed = std::move(observed);
  e.expected = std::move(expected);
  e.documented = documented && !holds;
  return e;
}

// ---- single-graph claims -------------------------------------------------

inline Evaluation fxt_n_iff_trivial_stab(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || !symmetric_connected(*g, cache)) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  bool trivial = true;
  for (Vertex v = 0; v < g->order() && trivial; ++v)
    trivial = a.group().pointwise_stabilizer(VertexSet::single(v)).is_trivial();
  return in_scope((a.fxt() == g->order()) == trivial,
                  {{"n", g->order()}, {"fxt", a.fxt()}, {"vertex_stabilizers_trivial", trivial}},
                  "F_xt = n exactly when every vertex stabilizer is trivial");
}

inline Evaluation interchange_separation(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || !symmetric_connected(*g, cache) || g->order() > kCountCap) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  const int n = g->order();
  int pairs = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!a.group().contains(Permutation::transposition(n, u, v))) continue;
      ++pairs;
      bool separated = true;
      a.for_each_partition(a.fxt(), [&](std::span<const VertexSet> classes) {
        for (VertexSet c : classes)
          if (c.contains(u) && c.contains(v)) separated = false;
      });
      if ((a.fxt() >= 2) != separated)
        return in_scope(false, {{"fxt", a.fxt()}, {"u", u}, {"v", v}, {"separated_in_every_maximum_partition", separated}},
                        "F_xt >= 2 exactly when every maximum fixatic partition separates interchanged u, v");
    }
  }
  if (pairs == 0) return {};
  return in_scope(true, {{"fxt", a.fxt()}, {"interchanged_pairs", pairs}}, "");
}

inline Evaluation odd_cycle_fxt_and_count(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g) return {};
  const int n = g->order();
  if (n < 3 || n % 2 == 0 || n > kCountCap || !is_connected(*g)) return {};
  for (Vertex v = 0; v < n; ++v)
    if (g->degree(v) != 2) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  const BigCount count = a.count_maximum();
  const BigCount formula = odd_cycle_partition_count(n);
  return in_scope(a.fxt() == n / 2 && count == formula,
                  {{"n", n}, {"fxt", a.fxt()}, {"pi_t", count_json(count)}, {"formula", count_json(formula)}},
                  "F_xt(C_n) = floor(n/2) and Pi_t equals the closed form");
}

inline Evaluation lemf1_bounds(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || !symmetric_connected(*g, cache) || g->order() > kLocaticCap) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  const int locatic = cache.locatic(*g);
  return in_scope(locatic <= a.fxt() && a.fxt() <= a.upper_bound(),
                  {{"locatic", locatic}, {"fxt", a.fxt()}, {"fix", a.fix()}, {"n", g->order()}},
                  "L(G) <= F_xt(G) <= floor(n / fix(G))");
}

inline Evaluation complement_corollary(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || !symmetric_connected(*g, cache)) return {};
  const int fxt = cache.fxt(*g);
  const int fxt_bar = cache.fxt(complement(*g));
  const int n = g->order();
  return in_scope(2 <= fxt + fxt_bar && fxt + fxt_bar <= 2 * n,
                  {{"n", n}, {"fxt", fxt}, {"fxt_complement", fxt_bar}},
                  "2 <= F_xt(G) + F_xt(complement) <= 2n");
}

inline Evaluation saturated_bound(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || !symmetric_connected(*g, cache)) return {};
  const int n = g->order();
  const int saturated = saturated_vertices(*g).size();
  const int fxt = cache.fxt(*g);
  return in_scope(fxt <= n - saturated + 2, {{"n", n}, {"saturated", saturated}, {"fxt", fxt}},
                  "F_xt <= n - n' + 2 where n' counts saturated vertices");
}

inline std::optional<VertexSet> large_twin_class(const Graph& g) {
  for (VertexSet t : twin_sets(g))
    if (t.size() >= 3) return t;
  return std::nullopt;
}

inline Evaluation twin_removal_u(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || !is_connected(*g)) return {};
  bool any = false;
  const int fxt = cache.fxt(*g);
  for (VertexSet t : twin_sets(*g)) {
    if (t.size() < 3) continue;
    any = true;
    for (Vertex u : t) {
      const int reduced = cache.fxt(remove_vertices(*g, VertexSet::single(u)));
      if (fxt > reduced)
        return in_scope(false, {{"fxt", fxt}, {"u", u}, {"fxt_without_u", reduced}, {"twin_set", t.to_vector()}},
                        "F_xt(G) <= F_xt(G - u) for u in a twin set of size >= 3");
    }
  }
  if (!any) return {};
  return in_scope(true, {{"fxt", fxt}}, "");
}

inline Evaluation twin_removal_B(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || !is_connected(*g)) return {};
  bool any = false;
  const int fxt = cache.fxt(*g);
  for (VertexSet t : twin_sets(*g)) {
    if (t.size() < 3) continue;
    any = true;
    const std::uint64_t full = t.bits();
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
      const VertexSet b(sub);
      if (b.size() <= t.size() - 2) {
        const int reduced = cache.fxt(remove_vertices(*g, b));
        if (fxt > reduced)
          return in_scope(false,
                          {{"fxt", fxt}, {"B", b.to_vector()}, {"fxt_without_B", reduced}, {"twin_set", t.to_vector()}},
                          "F_xt(G) <= F_xt(G - B) for B inside a twin set T, |B| <= |T| - 2");
      }
      if (sub == 0) break;
    }
  }
  if (!any) return {};
  return in_scope(true, {{"fxt", fxt}}, "");
}

inline Evaluation sum_upper(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || !symmetric_connected(*g, cache)) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  return in_scope(a.fix() + a.fxt() <= g->order() + 1, {{"n", g->order()}, {"fix", a.fix()}, {"fxt", a.fxt()}},
                  "fix + F_xt <= n + 1");
}

inline Evaluation sum_lower(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || !symmetric_connected(*g, cache)) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  return in_scope(g->order() <= a.fix() + a.fxt(), {{"n", g->order()}, {"fix", a.fix()}, {"fxt", a.fxt()}},
                  "n <= fix + F_xt (known not to hold in general, e.g. K_{1,3})", true);
}

inline Evaluation fixing_vertex_removal(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || g->order() < 3 || !symmetric_connected(*g, cache)) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  bool any = false;
  for (Vertex y : fixing_vertices(a.group())) {
    const Graph rest = remove_vertices(*g, VertexSet::single(y));
    if (!symmetric_connected(rest, cache)) continue;
    any = true;
    const int reduced = cache.fxt(rest);
    if (a.fxt() < reduced)
      return in_scope(false, {{"fxt", a.fxt()}, {"y", y}, {"fxt_without_y", reduced}},
                      "F_xt(G) >= F_xt(G - y) for a fixing vertex y with G - y connected and symmetric "
                      "(known not to hold in general: two leaves and a 2-path on one vertex, minus a leaf, "
                      "gives P_4)",
                      true);
  }
  if (!any) return {};
  return in_scope(true, {{"fxt", a.fxt()}}, "");
}

inline Evaluation k1_join(const Instance& in, AnalysisCache& cache) {
  const Graph* g2 = single(in);
  if (!g2 || !symmetric_connected(*g2, cache)) return {};
  const int joined = cache.fxt(join(Graph(1), *g2));
  const int own = cache.fxt(*g2);
  return in_scope(joined <= own, {{"fxt_join", joined}, {"fxt_G2", own}}, "F_xt(K_1 + G_2) <= F_xt(G_2)");
}

inline Evaluation no_singleton_when_equal(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || !symmetric_connected(*g, cache) || g->order() > kCountCap) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  if (a.fix() != a.fxt()) return in_scope(true, {{"fix", a.fix()}, {"fxt", a.fxt()}}, "");
  int singleton = -1;
  a.for_each_partition([&](std::span<const VertexSet> classes) {
    for (VertexSet c : classes)
      if (c.size() == 1 && singleton < 0) singleton = c.front();
  });
  return in_scope(singleton < 0, {{"fix", a.fix()}, {"fxt", a.fxt()}, {"singleton", singleton}},
                  "when fix = F_xt no fixatic partition has a singleton class");
}

inline bool is_c4_or_k4_minus_e(const Graph& g) {
  return g.order() == 4 && (isomorphic(g, families::cycle(4)) || isomorphic(g, families::k4_minus_e()));
}

inline Evaluation fxt2_edge_partition(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g || g->order() < 4 || g->order() > kCountCap || !symmetric_connected(*g, cache)) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  if (a.fxt() != 2) return {};
  bool all_edges = true;
  a.for_each_partition(2, [&](std::span<const VertexSet> classes) {
    for (VertexSet c : classes)
      if (c.size() != 2 || !g->adjacent(c.front(), (c - VertexSet::single(c.front())).front())) all_edges = false;
  });
  const bool listed = is_c4_or_k4_minus_e(*g);
  return in_scope(all_edges == listed, {{"every_class_is_an_edge", all_edges}, {"isomorphic_to_C4_or_K4_minus_e", listed}},
                  "with F_xt = 2, every class of every maximum fixatic partition induces K_2 "
                  "exactly when G is C_4 or K_4 - e");
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// True when v -> v + 1 (mod n) is an automorphism, i.e. g is Cay(Z_n; N(0))
/// in its given labelling.
inline bool is_natural_circulant(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) images[static_cast<std::size_t>(v)] = (v + 1) % n;
  return is_automorphism(g, Permutation(images));
}

inline Evaluation cayley_example(const Instance& in, AnalysisCache& cache) {
  const Graph* g = single(in);
  if (!g) return {};
  const int n = g->order();
  if (n < 3 || n % 2 == 0 || !is_prime(n) || !is_connected(*g) || !is_natural_circulant(*g)) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  const int p = (n - 1) / 2;
  const bool complete_graph = g->size() == n * (n - 1) / 2;
  std::vector<int> connection;
  for (Vertex v : g->neighbors(0)) connection.push_back(v);
  return in_scope(a.fix() == 2 && a.fxt() == p,
                  {{"n", n}, {"p", p}, {"S", connection}, {"fix", a.fix()}, {"fxt", a.fxt()}},
                  complete_graph ? "fix = 2 and F_xt = p (S = Z_n minus 0 gives K_n, where fix = n - 1)"
                                 : "fix = 2 and F_xt = p for n = 2p + 1 prime",
                  complete_graph);
}

inline Evaluation constant_fix_unbounded(const Instance& in, AnalysisCache& cache) {
  if (in.graphs.size() < 2) return {};
  const int fix = cache.fix(in.graphs.front());
  if (fix < 1) return {};
  std::vector<int> orders;
  std::vector<int> fxts;
  bool increasing = true;
  for (const Graph& g : in.graphs) {
    if (!is_connected(g) || cache.fix(g) != fix) return {};
    const int fxt = cache.fxt(g);
    if (!fxts.empty() && (fxt <= fxts.back() || g.order() <= orders.back())) increasing = false;
    orders.push_back(g.order());
    fxts.push_back(fxt);
  }
  return in_scope(increasing, {{"fix", fix}, {"orders", orders}, {"fxt", fxts}},
                  "F_xt strictly increases along a family with constant fixing number");
}

// ---- pair claims -----------------------------------------------------------

inline Evaluation join_fix_superadditive(const Instance& in, AnalysisCache& cache) {
  if (in.graphs.size() != 2) return {};
  const Graph& g1 = in.graphs[0];
  const Graph& g2 = in.graphs[1];
  if (!is_connected(g1) || !is_connected(g2)) return {};
  const int f1 = cache.fix(g1);
  const int f2 = cache.fix(g2);
  const int fj = cache.fix(join(g1, g2));
  return in_scope(fj >= f1 + f2, {{"fix_G1", f1}, {"fix_G2", f2}, {"fix_join", fj}},
                  "fix(G_1 + G_2) >= fix(G_1) + fix(G_2)");
}

inline Evaluation join_fxt_min(const Instance& in, AnalysisCache& cache) {
  if (in.graphs.size() != 2) return {};
  const Graph& g1 = in.graphs[0];
  const Graph& g2 = in.graphs[1];
  if (g1.order() < 2 || g2.order() < 2 || g1.order() + g2.order() < 5) return {};
  if (!is_connected(g1) || !is_connected(g2)) return {};
  const int x1 = cache.fxt(g1);
  const int x2 = cache.fxt(g2);
  const int xj = cache.fxt(join(g1, g2));
  return in_scope(xj <= std::min(x1, x2), {{"fxt_G1", x1}, {"fxt_G2", x2}, {"fxt_join", xj}},
                  "F_xt(G_1 + G_2) <= min(F_xt(G_1), F_xt(G_2))");
}

// ---- constructions -----------------------------------------------------------

inline Evaluation realization(const Instance& in, AnalysisCache& cache, const char* expected,
                              const std::function<bool(int, int, int)>& relation) {
  const Graph* g = single(in);
  if (!g || in.params.size() != 1) return {};
  const FixaticAnalysis& a = cache.analysis(*g);
  const int t = in.params.front();
  return in_scope(relation(a.fix(), a.fxt(), t), {{"t", t}, {"n", g->order()}, {"fix", a.fix()}, {"fxt", a.fxt()}},
                  expected);
}

inline std::vector<Instance> family_range(std::string_view name, int from, int to) {
  std::vector<Instance> out;
  for (int t = from; t <= to; ++t) out.push_back(family(name, {t}));
  return out;
}

inline std::vector<Instance> cayley_instances() {
  const std::vector<std::vector<int>> sets = {
      {5, 1, 4},    {5, 2, 3},       {5, 1, 2, 3, 4},       {7, 1, 6},          {7, 2, 5},
      {7, 3, 4},    {7, 1, 2, 5, 6}, {7, 1, 3, 4, 6},       {7, 2, 3, 4, 5},    {7, 1, 2, 3, 4, 5, 6},
      {11, 1, 10},  {11, 1, 2, 9, 10}, {3, 1, 2},
  };
  std::vector<Instance> out;
  for (const auto& s : sets) {
    std::string label = "circulant";
    for (int x : s) label += " " + std::to_string(x);
    out.push_back(wrap(families::generate("circulant", s), label, s));
  }
  return out;
}

inline std::vector<Instance> constant_fix_families() {
  Instance paths{{}, "even paths P_2 .. P_12", {}};
  for (int n = 2; n <= 12; n += 2) paths.graphs.push_back(families::path(n));
  Instance cycles{{}, "odd cycles C_3 .. C_11", {}};
  for (int n = 3; n <= 11; n += 2) cycles.graphs.push_back(families::cycle(n));
  return {paths, cycles};
}

inline std::vector<Instance> concat(std::vector<Instance> a, std::vector<Instance> b) {
  a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  return a;
}

inline std::vector<Instance> no_scan(int) { return {}; }

}  // namespace claims_detail

/// Every registered claim, in report order.
inline const std::vector<Claim>& claim_registry() {
  namespace cd = claims_detail;
  static const std::vector<Claim> registry = [] {
    auto generic = [](int max_n) { return cd::generic_corpus(max_n); };
    auto scan = [](int n) { return cd::scan_instances(n); };
    auto pair_scan = [](int n) { return cd::join_pairs(n); };
    auto pair_corpus = [](int max_n) { return cd::join_pairs(std::min(max_n, cd::kJoinMaxFactorOrder)); };
    auto realize = [](std::string_view name, int from, int to) {
      return [=](int) { return cd::family_range(name, from, to); };
    };
    std::vector<Claim> r = {
        {"fxt_n_iff_trivial_stab", "F_xt(G) = n iff every vertex stabilizer of G is trivial",
         cd::fxt_n_iff_trivial_stab, generic, scan},
        {"interchange_separation",
         "if an automorphism swaps u and v and fixes everything else, F_xt(G) >= 2 iff u and v lie in different "
         "classes of every maximum fixatic partition",
         cd::interchange_separation, generic, scan},
        {"odd_cycle_fxt_and_count", "for odd n >= 3, F_xt(C_n) = floor(n/2) and Pi_t matches the closed form",
         cd::odd_cycle_fxt_and_count,
         [](int max_n) {
           auto out = cd::scans_up_to(max_n, 3);
           for (int n = 3; n <= 11; n += 2) out.push_back(cd::family("cycle", {n}));
           return out;
         },
         scan},
        {"lemf1_bounds", "L(G) <= F_xt(G) <= floor(n / fix(G))", cd::lemf1_bounds, generic, scan},
        {"complement_corollary", "2 <= F_xt(G) + F_xt(complement of G) <= 2n", cd::complement_corollary, generic,
         scan},
        {"saturated_bound", "F_xt(G) <= n - n' + 2, n' the number of saturated vertices", cd::saturated_bound,
         generic, scan},
        {"twin_removal_u", "F_xt(G) <= F_xt(G - u) for u in a twin set of size >= 3", cd::twin_removal_u, generic,
         scan},
        {"twin_removal_B", "F_xt(G) <= F_xt(G - B) for B inside a twin set T with |T| >= 3 and |B| <= |T| - 2",
         cd::twin_removal_B, generic, scan},
        {"sum_upper", "fix(G) + F_xt(G) <= n + 1", cd::sum_upper, generic, scan},
        {"sum_lower", "n <= fix(G) + F_xt(G)", cd::sum_lower, generic, scan},
        {"fixing_vertex_removal",
         "F_xt(G) >= F_xt(G - y) for a fixing vertex y when G - y is connected and symmetric",
         cd::fixing_vertex_removal, generic, scan},
        {"join_fix_superadditive", "fix(G_1 + G_2) >= fix(G_1) + fix(G_2)", cd::join_fix_superadditive,
         pair_corpus, pair_scan},
        {"join_fxt_min", "F_xt(G_1 + G_2) <= min(F_xt(G_1), F_xt(G_2)) for n_1, n_2 >= 2 and n_1 + n_2 >= 5",
         cd::join_fxt_min, pair_corpus, pair_scan},
        {"k1_join", "F_xt(K_1 + G_2) <= F_xt(G_2)", cd::k1_join,
         [](int max_n) { return cd::concat(cd::iso_reduced(2, max_n), cd::family_instances()); }, scan},
        {"no_singleton_when_equal", "if fix(G) = F_xt(G), no fixatic partition has a singleton class",
         cd::no_singleton_when_equal, generic, scan},
        {"fxt2_edge_partition",
         "for n >= 4 and F_xt(G) = 2, every class of every maximum fixatic partition induces an edge iff G is C_4 "
         "or K_4 - e",
         cd::fxt2_edge_partition, generic, scan},
        {"cayley_example", "Cay(Z_n; S) with n = 2p + 1 prime has fix = 2 and F_xt = p", cd::cayley_example,
         [](int max_n) { return cd::concat(cd::scans_up_to(max_n, 3), cd::cayley_instances()); }, scan},
        {"constant_fix_unbounded", "a family with constant fixing number has unbounded fixatic number",
         cd::constant_fix_unbounded, [](int) { return cd::constant_fix_families(); },
         [](int) { return cd::constant_fix_families(); }},
        {"realize_fix_eq_fxt", "broom_pair(t) has fix = F_xt = t",
         [](const Instance& in, AnalysisCache& c) {
           return cd::realization(in, c, "fix = F_xt = t", [](int f, int x, int t) { return f == t && x == t; });
         },
         realize("broom_pair", 2, 3), realize("broom_pair", 2, 3)},
        {"realize_fxt_fix_plus_one", "spider_dan1(t) has fix = t and F_xt = t + 1",
         [](const Instance& in, AnalysisCache& c) {
           return cd::realization(in, c, "fix = t, F_xt = t + 1",
                                  [](int f, int x, int t) { return f == t && x == t + 1; });
         },
         realize("spider_dan1", 2, 3), realize("spider_dan1", 2, 3)},
        {"realize_sum", "caterpillar2(t) has fix + F_xt = t",
         [](const Instance& in, AnalysisCache& c) {
           return cd::realization(in, c, "fix + F_xt = t", [](int f, int x, int t) { return f + x == t; });
         },
         realize("caterpillar2", 3, 5), realize("caterpillar2", 3, 5)},
        {"realize_difference", "spider_rslt(t) has fix = t and F_xt = 2t",
         [](const Instance& in, AnalysisCache& c) {
           return cd::realization(in, c, "fix = t, F_xt = 2t",
                                  [](int f, int x, int t) { return f == t && x == 2 * t; });
         },
         realize("spider_rslt", 1, 2), realize("spider_rslt", 1, 2)},
        {"realize_fix_minus_fxt", "double_broom(t) has fix - F_xt = t",
         [](const Instance& in, AnalysisCache& c) {
           return cd::realization(in, c, "fix - F_xt = t", [](int f, int x, int t) { return f - x == t; });
         },
         realize("double_broom", 3, 4), realize("double_broom", 3, 4)},
    };
    return r;
  }();
  return registry;
}

inline const Claim& find_claim(std::string_view id) {
  for (const Claim& c : claim_registry())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown claim '" + std::string(id) + "'");
}

inline ClaimReport run_claim(const Claim& claim, const std::vector<Instance>& corpus, AnalysisCache& cache) {
  const auto results = parallel_map<Evaluation>(
      corpus.size(), [&](std::size_t i) { return claim.evaluate(corpus[i], cache); });
  ClaimReport report{std::string(claim.id), std::string(claim.statement), 0, {}};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Evaluation& e = results[i];
    if (!e.in_scope) continue;
    ++report.tested;
    if (e.holds) continue;
    report.counterexamples.push_back(
        {instance_graph6(corpus[i]), corpus[i].label, corpus[i].params, e.observed, e.expected, e.documented});
  }
  return report;
}

inline ClaimReport run_claim(std::string_view id, const std::vector<Instance>& corpus) {
  AnalysisCache cache;
  return run_claim(find_claim(id), corpus, cache);
}

inline ClaimReport run_claim(std::string_view id, const std::vector<Graph>& graphs) {
  std::vector<Instance> corpus;
  corpus.reserve(graphs.size());
  for (const Graph& g : graphs) corpus.push_back(Instance{{g}, "", {}});
  return run_claim(id, corpus);
}

/// One claim over its scan corpus at order n (pairs up to order n for the
/// join claims).
inline ClaimReport scan_claim(std::string_view id, int n) {
  const Claim& claim = find_claim(id);
  AnalysisCache cache;
  return run_claim(claim, claim.scan(n), cache);
}

/// Every registered claim over its own corpus.
inline std::vector<ClaimReport> verify_paper(int max_n) {
  if (max_n < 2 || max_n > kVerifyMaxOrder)
    throw std::invalid_argument("verify needs 2 <= max_n <= " + std::to_string(kVerifyMaxOrder) + ", got " +
                                std::to_string(max_n));
  AnalysisCache cache;
  std::vector<ClaimReport> out;
  for (const Claim& claim : claim_registry()) out.push_back(run_claim(claim, claim.corpus(max_n), cache));
  return out;
}

/// Re-evaluates a reported counterexample on its own; true when it still fails.
inline bool recheck(std::string_view id, const Counterexample& cx) {
  Instance instance{{}, cx.label, cx.params};
  std::stringstream parts(cx.graph6);
  for (std::string piece; std::getline(parts, piece, ',');) instance.graphs.push_back(parse_graph6(piece));
  AnalysisCache cache;
  const Evaluation e = find_claim(id).evaluate(instance, cache);
  return e.in_scope && !e.holds;
}

inline Json to_json(const Counterexample& c) {
  Json j = {{"graph6", c.graph6},     {"label", c.label},           {"observed", c.observed},
            {"expected", c.expected}, {"documented", c.documented}};
  if (!c.params.empty()) j["params"] = c.params;
  return j;
}

inline Json to_json(const ClaimReport& r) {
  Json cx = Json::array();
  for (const Counterexample& c : r.counterexamples) cx.push_back(to_json(c));
  return {{"claim", r.claim},       {"statement", r.statement},
          {"tested", r.tested},     {"verdict", r.verdict()},
          {"expected_failure", r.expected_failure()}, {"counterexamples", std::move(cx)}};
}

}  // namespace fixatic
