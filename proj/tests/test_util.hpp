#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "oddgreedy/exact.hpp"

namespace oddgreedy::testing {

inline std::vector<OddInt> odds(std::initializer_list<std::int64_t> xs) {
  return {xs.begin(), xs.end()};
}

/// Random odd tuple with entries in [1, max_entry].
inline std::vector<OddInt> random_odd_tuple(std::mt19937_64& rng, std::size_t len,
                                            std::int64_t max_entry) {
  std::uniform_int_distribution<std::int64_t> half(0, (max_entry - 1) / 2);
  std::vector<OddInt> out;
  for (std::size_t i = 0; i < len; ++i) out.emplace_back(2 * half(rng) + 1);
  return out;
}

/// Calls fn on every odd tuple of length 1..max_len with entries <= max_entry.
inline void for_each_odd_tuple(std::size_t max_len, std::int64_t max_entry,
                               const std::function<void(const std::vector<OddInt>&)>& fn) {
  std::vector<std::int64_t> digits;
  for (std::size_t len = 1; len <= max_len; ++len) {
    digits.assign(len, 1);
    while (true) {
      fn(std::vector<OddInt>(digits.begin(), digits.end()));
      std::size_t pos = len;
      while (pos > 0 && digits[pos - 1] + 2 > max_entry) digits[--pos] = 1;
      if (pos == 0) break;
      digits[pos - 1] += 2;
    }
  }
}

/// Subset-enumeration elementary symmetric polynomial.
inline Integer sigma_by_subsets(long k, const std::vector<Integer>& xs) {
  if (k < 0) return 0;
  Integer total = 0;
  const std::size_t n = xs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<long>(__builtin_popcountll(mask)) != k) continue;
    Integer prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) prod *= xs[i];
    }
    total += prod;
  }
  return total;
}

/// v_p by repeated exact division of a machine integer.
inline unsigned naive_vp(std::uint64_t p, std::uint64_t n) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace oddgreedy::testing
