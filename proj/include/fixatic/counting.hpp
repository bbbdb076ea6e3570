#pragma once

#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixatic/bigcount.hpp"

namespace fixatic {

inline BigCount factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigCount out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigCount binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

/// S(n, k): partitions of an n-set into k non-empty blocks.
inline BigCount stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2 needs n, k >= 0");
  if (k > n) return 0;
  // row[j] holds S(i, j) while i sweeps 0..n.
  std::vector<BigCount> row(static_cast<std::size_t>(k + 1), 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

/// Surjections from an n-set onto a k-set: k! S(n, k).
inline BigCount surjection_count(int n, int k) { return factorial(k) * stirling2(n, k); }

/// n! / (parts_1! parts_2! ...).
inline BigCount multinomial(int n, std::span<const int> parts) {
  long long total = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative multinomial part");
    total += p;
  }
  if (total != n)
    throw std::invalid_argument("multinomial parts sum to " + std::to_string(total) + ", expected " +
                                std::to_string(n));
  BigCount out = factorial(n);
  for (int p : parts) out /= factorial(p);
  return out;
}

inline BigCount multinomial(int n, std::initializer_list<int> parts) {
  return multinomial(n, std::span<const int>(parts.begin(), parts.size()));
}

/// Partitions of an n-set into k blocks of size i each: n! / ((i!)^k k!).
inline BigCount equal_class_partition_count(int n, int k, int i) {
  if (n < 0 || k < 0 || i < 0 || static_cast<long long>(k) * i != n)
    throw std::invalid_argument("equal_class_partition_count needs n = k * i");
  BigCount denominator = factorial(k);
  const BigCount block = factorial(i);
  for (int j = 0; j < k; ++j) denominator *= block;
  return factorial(n) / denominator;
}

/// Whether the closed form below covers n as written (it degenerates at n = 3).
inline bool odd_cycle_formula_applies(int n) { return n >= 5 && n % 2 == 1; }

/// Maximum fixatic partitions of the odd cycle C_n: one class of three
/// vertices and floor(n/2) - 1 unordered pairs,
///   C(n, 3) * multinomial(n - 3; 2, ..., 2) / (floor(n/2) - 1)!.
/// For n = 3 there are no pairs and the count is the single one-class partition.
inline BigCount odd_cycle_partition_count(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("odd_cycle_partition_count needs odd n >= 3, got " + std::to_string(n));
  const int pairs = n / 2 - 1;
  if (pairs == 0) return 1;
  std::vector<int> twos(static_cast<std::size_t>(pairs), 2);
  return binomial(n, 3) * multinomial(n - 3, twos) / factorial(pairs);
}

}  // namespace fixatic
