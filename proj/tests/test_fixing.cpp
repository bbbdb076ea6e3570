#include <gtest/gtest.h>

#include <random>

#include "fixatic/fixing.hpp"
#include "fixatic/families.hpp"
#include "oracles.hpp"

namespace fixatic {
namespace {

using namespace families;

VertexSet set_of(std::initializer_list<Vertex> vs) {
  VertexSet s;
  for (Vertex v : vs) s.insert(v);
  return s;
}

TEST(FixingSetTest, CycleAndStar) {
  const Graph c5 = cycle(5);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) EXPECT_TRUE(is_fixing_set(c5, set_of({u, v})));
  EXPECT_FALSE(is_fixing_set(c5, set_of({0})));
  EXPECT_FALSE(is_fixing_set(star(3), set_of({1})));
  EXPECT_TRUE(is_fixing_set(star(3), set_of({1, 2})));
  EXPECT_TRUE(is_fixing_set(star(3), star(3).vertices()));
  EXPECT_THROW(is_fixing_set(c5, set_of({5})), std::out_of_range);
}

TEST(FixingSetTest, WholeVertexSetAndAllButOne) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      const PermutationGroup group = automorphism_group(g);
      EXPECT_TRUE(is_fixing_set(group, g.vertices()));
      for (Vertex v = 0; v < n; ++v) EXPECT_TRUE(is_fixing_set(group, g.vertices() - VertexSet::single(v)));
    }
  }
}

TEST(FixingNumberTest, Families) {
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(fixing_number(cycle(n)).size, 2) << n;
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(fixing_number(complete(n)).size, n - 1) << n;
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(fixing_number(path(n)).size, 1) << n;
  EXPECT_EQ(fixing_number(Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}})).size, 0);
  EXPECT_EQ(fixing_number(star(3)).size, 2);
  EXPECT_EQ(fixing_number(complete(20)).size, 19);
}

TEST(FixingNumberTest, WitnessIsAMinimumFixingSet) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 11), rng);
    const PermutationGroup group = automorphism_group(g);
    const FixingWitness w = fixing_number(group);
    EXPECT_EQ(w.witness.size(), w.size);
    EXPECT_TRUE(is_fixing_set(group, w.witness));
  }
}

TEST(FixingNumberTest, MatchesSubsetScanOnAllSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      const PermutationGroup group = automorphism_group(g);
      const int fix = fixing_number(group).size;
      ASSERT_EQ(fix, oracle::fixing_number(g)) << oracle::graph6(g);
      EXPECT_EQ(fix == 0, group.is_trivial());
      EXPECT_LE(fix, std::max(n - 1, 0));
      EXPECT_EQ(fix, fixing_number(complement(g)).size);
    }
  }
}

TEST(FixingSetsTest, HittingSetViewAgreesWithStabilizers) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_graphs(n)) {
      const PermutationGroup group = automorphism_group(g);
      const FixingSets sets(group);
      const auto all = oracle::automorphisms(g);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const VertexSet s(m);
        ASSERT_EQ(sets.is_fixing(s), oracle::fixing(all, s)) << oracle::graph6(g) << " " << s.to_string();
      }
      EXPECT_EQ(sets.min_size(), fixing_number(group).size);
    }
  }
}

TEST(FixingSetsTest, Monotone) {
  const PermutationGroup group = automorphism_group(cycle(6));
  const FixingSets sets(group);
  for (std::uint64_t m = 0; m < 64; ++m) {
    if (!sets.is_fixing(VertexSet(m))) continue;
    for (Vertex v = 0; v < 6; ++v) EXPECT_TRUE(sets.is_fixing(VertexSet(m) | VertexSet::single(v)));
  }
}

TEST(MinimumFixingSetsTest, Examples) {
  EXPECT_EQ(minimum_fixing_sets(cycle(5)).size(), 10U);
  EXPECT_EQ(minimum_fixing_sets(star(3)),
            (std::vector<VertexSet>{set_of({1, 2}), set_of({1, 3}), set_of({2, 3})}));
  EXPECT_EQ(minimum_fixing_sets(path(4)),
            (std::vector<VertexSet>{set_of({0}), set_of({1}), set_of({2}), set_of({3})}));
  EXPECT_THROW(minimum_fixing_sets(path(17)), CapacityError);
}

TEST(FixingVerticesTest, Examples) {
  EXPECT_EQ(fixing_vertices(path(7)), path(7).vertices() - VertexSet::single(3));
  EXPECT_TRUE(fixing_vertices(star(3)).empty());
  EXPECT_EQ(fixing_vertices(path(4)), path(4).vertices());
}

}  // namespace
}  // namespace fixatic
