#pragma once

// All rationals whose odd greedy expansion has length m and starts with a
// fixed admissible prefix x_1..x_{m-1}.

#include <string>
#include <vector>

#include "oddgreedy/exact.hpp"
#include "oddgreedy/family.hpp"
#include "oddgreedy/greedy.hpp"

namespace oddgreedy {

struct PrefixFamilyResult {
  std::vector<OddInt> prefix;
  OddInt b;
  AffineFamily family;
};

inline void require_admissible(std::span<const OddInt> prefix) {
  if (prefix.empty()) return;
  if (auto bad = first_greedy_violation(prefix)) {
    throw std::invalid_argument("prefix is not a greedy sequence: inequality fails at (i,k)=(" +
                                std::to_string(bad->first) + "," + std::to_string(bad->second) +
                                ")");
  }
}

/// Smallest odd integer >= 1 strictly greater than q.
inline OddInt smallest_odd_above(const Fraction& q) {
  Integer x = q.floor() + 1;
  if (!is_odd(x)) ++x;
  if (x < 1) x = 1;
  if (Fraction{x} <= q) throw std::logic_error("smallest_odd_above: not strictly above " + q.str());
  return OddInt{std::move(x)};
}

/// Max over i of the lower bounds for the next denominator (0 when empty).
inline Fraction next_denominator_bound(std::span<const OddInt> prefix) {
  Fraction q{0, 1};
  for (std::size_t i = 1; i <= prefix.size(); ++i) {
    Fraction bound = xk_lower_bound(prefix, i, prefix.size() + 1);
    if (i == 1 || bound > q) q = bound;
  }
  return q;
}

inline OddInt threshold_b(std::span<const OddInt> prefix) {
  require_admissible(prefix);
  return smallest_odd_above(next_denominator_bound(prefix));
}
inline OddInt threshold_b(const std::vector<OddInt>& prefix) {
  return threshold_b(std::span<const OddInt>(prefix));
}

/// (sigma_{m-1}(prefix, b) + 2 sigma_{m-2}(prefix) t) / (P b + 2 P t), P = prod(prefix).
inline PrefixFamilyResult prefix_family(std::span<const OddInt> prefix) {
  OddInt b = threshold_b(prefix);
  std::vector<OddInt> full(prefix.begin(), prefix.end());
  full.push_back(b);
  const auto m = static_cast<long>(full.size());
  const Integer p = product<OddInt>(prefix);
  AffineFamily f{sigma(m - 1, full), 2 * sigma<OddInt>(m - 2, prefix), p * b.value(), 2 * p, "t"};
  return {std::vector<OddInt>(prefix.begin(), prefix.end()), std::move(b), std::move(f)};
}
inline PrefixFamilyResult prefix_family(const std::vector<OddInt>& prefix) {
  return prefix_family(std::span<const OddInt>(prefix));
}

/// ((x^2+3)/2 + 2t) / ((x^3+3x)/2 - x^2 + 2x t): length-2 expansions starting at x.
inline AffineFamily fixed1_length2_family(const OddInt& x1) {
  const Integer& x = x1.value();
  AffineFamily f{(x * x + 3) / 2, 2, (x * x * x + 3 * x) / 2 - x * x, 2 * x, "t"};
  const std::vector<OddInt> prefix{x1};
  if (!same_coefficients(f, prefix_family(prefix).family)) {
    throw std::logic_error("closed form disagrees with the threshold family for x1=" + x.str());
  }
  return f;
}

}  // namespace oddgreedy
