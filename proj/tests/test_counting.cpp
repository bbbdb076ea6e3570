#include <gtest/gtest.h>

#include <map>

#include "fixatic/counting.hpp"
#include "oracles.hpp"

namespace fixatic {
namespace {

std::int64_t power(std::int64_t b, int e) {
  std::int64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

std::int64_t choose(int n, int k) {
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::int64_t inclusion_exclusion(int n, int k) {
  std::int64_t sum = 0;
  for (int j = 0; j <= k; ++j) sum += (j % 2 == 0 ? 1 : -1) * choose(k, j) * power(k - j, n);
  return sum;
}

// Counts maps {0..n-1} -> {0..k-1} hitting every value.
std::int64_t surjections_by_enumeration(int n, int k) {
  std::int64_t count = 0;
  const std::int64_t total = power(k, n);
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    std::uint64_t hit = 0;
    for (int i = 0; i < n; ++i) {
      hit |= std::uint64_t{1} << (c % k);
      c /= k;
    }
    if (hit == (std::uint64_t{1} << k) - 1) ++count;
  }
  return count;
}

TEST(StirlingTest, Examples) {
  EXPECT_EQ(stirling2(4, 2), 7);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(stirling2(n, 1), 1);
    EXPECT_EQ(stirling2(n, n), 1);
  }
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(3, 5), 0);
  EXPECT_EQ(stirling2(5, 0), 0);
  EXPECT_THROW(stirling2(-1, 0), std::invalid_argument);
}

TEST(StirlingTest, MatchesPartitionEnumeration) {
  for (int n = 0; n <= 8; ++n) {
    std::map<std::size_t, std::int64_t> by_blocks;
    oracle::for_each_set_partition(n, [&](const std::vector<VertexSet>& classes) { ++by_blocks[classes.size()]; });
    for (int k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), by_blocks[static_cast<std::size_t>(k)]) << n << " " << k;
  }
}

TEST(SurjectionTest, Examples) {
  EXPECT_EQ(surjection_count(3, 2), 6);
  EXPECT_EQ(surjection_count(2, 3), 0);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(surjection_count(n, n), factorial(n));
}

TEST(SurjectionTest, MatchesInclusionExclusion) {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= 10; ++k) EXPECT_EQ(surjection_count(n, k), inclusion_exclusion(n, k)) << n << " " << k;
}

TEST(SurjectionTest, MatchesEnumeration) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(surjection_count(n, k), surjections_by_enumeration(n, k));
}

TEST(MultinomialTest, Examples) {
  EXPECT_EQ(multinomial(4, {2, 2}), 6);
  EXPECT_EQ(multinomial(6, {2, 2, 2}), 90);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(multinomial(n, {n}), 1);
  EXPECT_THROW(multinomial(5, {2, 2}), std::invalid_argument);
  EXPECT_THROW(multinomial(0, {1, -1}), std::invalid_argument);
}

TEST(EqualClassTest, Examples) {
  EXPECT_EQ(equal_class_partition_count(6, 3, 2), 15);
  EXPECT_EQ(equal_class_partition_count(4, 2, 2), 3);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(equal_class_partition_count(n, 1, n), 1);
  EXPECT_THROW(equal_class_partition_count(7, 3, 2), std::invalid_argument);
}

TEST(EqualClassTest, MatchesEnumerationAndMultinomial) {
  for (int i = 1; i <= 3; ++i) {
    for (int k = 1; k * i <= 9; ++k) {
      const int n = k * i;
      std::int64_t count = 0;
      oracle::for_each_set_partition(n, [&](const std::vector<VertexSet>& classes) {
        if (static_cast<int>(classes.size()) != k) return;
        for (VertexSet c : classes)
          if (c.size() != i) return;
        ++count;
      });
      EXPECT_EQ(equal_class_partition_count(n, k, i), count) << n << " " << k << " " << i;
      const std::vector<int> parts(static_cast<std::size_t>(k), i);
      EXPECT_EQ(equal_class_partition_count(n, k, i) * factorial(k), multinomial(n, parts));
    }
  }
}

TEST(OddCycleTest, Formula) {
  EXPECT_EQ(odd_cycle_partition_count(5), 10);
  EXPECT_EQ(odd_cycle_partition_count(7), 105);
  EXPECT_EQ(odd_cycle_partition_count(9), 1260);
  EXPECT_EQ(odd_cycle_partition_count(3), 1);
  EXPECT_FALSE(odd_cycle_formula_applies(3));
  EXPECT_TRUE(odd_cycle_formula_applies(5));
  EXPECT_THROW(odd_cycle_partition_count(6), std::invalid_argument);
  EXPECT_THROW(odd_cycle_partition_count(1), std::invalid_argument);
}

TEST(OddCycleTest, LargeValuesStayExact) {
  // C(41,3) * 38! / (2^19 * 19!).
  const BigCount expected = BigCount(10660) * factorial(38) / (BigCount(1) << 19) / factorial(19);
  EXPECT_EQ(odd_cycle_partition_count(41), expected);
}

}  // namespace
}  // namespace fixatic
