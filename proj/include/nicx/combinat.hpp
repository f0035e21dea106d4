#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nicx/bits.hpp"

namespace nicx {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient as uint64; asserts against overflow (the overflowing
// range is never needed for indexing, use binomial_big for counting).
std::uint64_t binom(int n, int k);
BigInt binomial_big(int n, int k);
BigInt factorial_big(int n);

// Colexicographic rank of the pair {a,b}, 0 <= a < b: index = C(b,2) + a.
inline int pair_rank(int a, int b) { return b * (b - 1) / 2 + a; }
std::pair<int, int> pair_unrank(int idx);

// Colex rank of a k-subset given as ascending 0-based vertices.
std::uint64_t subset_rank(const std::vector<int>& verts);
// Inverse: the idx-th k-subset of an unbounded ground set, colex order.
std::vector<int> subset_unrank(std::uint64_t idx, int k);

// Visit all k-subsets of {0..m-1} in colex order, as 64-bit masks (m <= 64).
void for_each_k_subset(int m, int k, const std::function<void(Face)>& fn);

// Number theory.
int mobius_mu(int n);
int euler_phi(int n);
std::vector<int> divisors_of(int n);

// Integer partitions of n, weakly decreasing, in a fixed deterministic order.
std::vector<std::vector<int>> partitions_of(int n);

// Set partitions of {0..n-1}; blocks are bit masks ordered by smallest
// element (the natural order of a restricted-growth string).
void for_each_set_partition(int n, const std::function<void(const std::vector<std::uint32_t>&)>& fn);

} // namespace nicx
