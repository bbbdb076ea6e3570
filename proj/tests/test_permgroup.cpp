#include <gtest/gtest.h>

#include <random>

#include "fixatic/autom.hpp"
#include "fixatic/families.hpp"
#include "fixatic/perm_group.hpp"
#include "oracles.hpp"

namespace fixatic {
namespace {

Permutation P(std::vector<Vertex> images) { return Permutation(std::move(images)); }

TEST(PermutationTest, ComposeAppliesRightOperandFirst) {
  EXPECT_EQ(compose(P({1, 0, 2}), P({0, 2, 1})), P({1, 2, 0}));
  const Permutation p = P({2, 0, 3, 1});
  EXPECT_EQ(compose(p, Permutation::identity(4)), p);
  EXPECT_EQ(compose(Permutation::identity(4), p), p);
  EXPECT_TRUE(compose(p, inverse(p)).is_identity());
  EXPECT_THROW(compose(p, Permutation::identity(3)), std::invalid_argument);
}

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(P({0, 0}), std::invalid_argument);
  EXPECT_THROW(P({0, 2}), std::invalid_argument);
}

TEST(PermutationTest, CompositionIsAssociative) {
  std::mt19937_64 rng(5);
  auto random_perm = [&](int n) {
    std::vector<Vertex> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return P(v);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Permutation a = random_perm(n), b = random_perm(n), c = random_perm(n);
    ASSERT_EQ(compose(a, compose(b, c)), compose(compose(a, b), c));
    ASSERT_EQ(inverse(compose(a, b)), compose(inverse(b), inverse(a)));
  }
}

TEST(PermutationGroupTest, DihedralGroupOfSquare) {
  // Rotation and a reflection of C_4.
  PermutationGroup d4(4, {P({1, 2, 3, 0}), P({0, 3, 2, 1})});
  EXPECT_EQ(d4.order(), 8);
  EXPECT_EQ(d4.orbits(), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}}));
  PermutationGroup s0 = d4.pointwise_stabilizer(VertexSet{0});
  EXPECT_EQ(s0.order(), 2);
  EXPECT_EQ(oracle::as_lists(s0.elements()), (std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 3, 2, 1}}));
  EXPECT_TRUE(d4.pointwise_stabilizer(VertexSet{0, 1}).is_trivial());
  EXPECT_TRUE(d4.pointwise_stabilizer(VertexSet::first(4)).is_trivial());
  EXPECT_EQ(d4.pointwise_stabilizer(VertexSet{}).order(), 8);
  EXPECT_THROW(d4.pointwise_stabilizer(VertexSet{4}), std::out_of_range);
}

TEST(PermutationGroupTest, KnownOrders) {
  EXPECT_EQ(automorphism_group(families::complete(4)).order(), 24);
  EXPECT_EQ(automorphism_group(families::cycle(5)).order(), 10);
  EXPECT_EQ(automorphism_group(families::path(4)).order(), 2);
  EXPECT_EQ(automorphism_group(families::complete(20)).order().str(), "2432902008176640000");
}

TEST(PermutationGroupTest, OrbitsOfSmallGraphs) {
  using Orbits = std::vector<std::vector<Vertex>>;
  EXPECT_EQ(automorphism_group(families::path(4)).orbits(), (Orbits{{0, 3}, {1, 2}}));
  EXPECT_EQ(automorphism_group(families::star(3)).orbits(), (Orbits{{0}, {1, 2, 3}}));
}

TEST(PermutationGroupTest, TrivialGroup) {
  PermutationGroup t = PermutationGroup::trivial(5);
  EXPECT_TRUE(t.is_trivial());
  EXPECT_EQ(t.order(), 1);
  EXPECT_EQ(t.elements().size(), 1U);
  PermutationGroup only_identity(3, {Permutation::identity(3)});
  EXPECT_TRUE(only_identity.is_trivial());
}

TEST(PermutationGroupTest, MaterializationCap) {
  EXPECT_THROW(automorphism_group(families::complete(10)).elements(), CapacityError);
}

// Explicit lists equal the composition closure of the generators, and the
// orbit-stabilizer identity and antitonicity hold, for every graph on <= 5
// vertices and random graphs on 6 and 7.
TEST(PermutationGroupTest, ChainAgreesWithClosureProperties) {
  std::vector<Graph> corpus;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n)) corpus.push_back(g);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) corpus.push_back(oracle::random_graph(6 + static_cast<int>(rng() % 2), rng));

  for (const Graph& g : corpus) {
    const PermutationGroup grp = automorphism_group(g);
    const auto listed = oracle::as_lists(grp.elements());
    ASSERT_EQ(listed, oracle::closure(g.order(), grp.generators()));
    ASSERT_EQ(grp.order(), listed.size());
    for (const auto& p : listed) ASSERT_TRUE(grp.contains(Permutation(p)));

    for (Vertex v = 0; v < g.order(); ++v) {
      const auto orbit = grp.orbit_of(v);
      const PermutationGroup stab = grp.pointwise_stabilizer(VertexSet::single(v));
      ASSERT_EQ(grp.order(), stab.order() * orbit.size());
      ASSERT_EQ(stab.order(), oracle::stabilizer_size(listed, VertexSet::single(v)));
    }
    const VertexSet f(rng() & VertexSet::first(g.order()).bits());
    const VertexSet bigger = f | VertexSet(rng() & VertexSet::first(g.order()).bits());
    const PermutationGroup sf = grp.pointwise_stabilizer(f);
    const PermutationGroup sb = grp.pointwise_stabilizer(bigger);
    ASSERT_EQ(sf.order(), oracle::stabilizer_size(listed, f));
    for (const Permutation& p : sb.elements()) ASSERT_TRUE(sf.contains(p));
  }
}

}  // namespace
}  // namespace fixatic
