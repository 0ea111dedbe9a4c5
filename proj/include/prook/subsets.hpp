#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace prook {

// A subset of {1..n} packed into a word: bit (i-1) is set iff i is in the set.
using Mask = std::uint32_t;

// Largest supported row size.  Keeps every mask in 32 bits and every count
// used by the library (diagram counts, binomials) inside 64-bit integers.
inline constexpr int kMaxSize = 30;

inline int subset_size(Mask s) { return std::popcount(s); }

inline Mask full_mask(int n) { return n == 0 ? 0u : (Mask{1} << n) - 1; }

inline Mask single(int element) { return Mask{1} << (element - 1); }

inline bool contains(Mask s, int element) { return (s >> (element - 1)) & 1u; }

// Elements of s in ascending order, 1-based.
std::vector<int> elements(Mask s);

Mask mask_of(std::initializer_list<int> elems);
Mask mask_of(const std::vector<int>& elems);

// Exact binomial coefficient; 0 outside 0 <= k <= n.  Guarded so that all
// values representable for n <= 2*kMaxSize fit in long long.
long long binomial(int n, int k);

// All k-subsets of {1..n} in ascending numeric mask order.
std::vector<Mask> k_subsets(int n, int k);

// Successor of mask m in the ascending order on equal-size subsets of
// {1..n}; nullopt packaged as 0 would be ambiguous, so the caller tests
// against full range via the bool.
bool next_k_subset(Mask& m, int n);

} // namespace prook
