#pragma once

// Two-parameter families of length-m expansions over a fixed prefix of
// length m-2. Not exhaustive: other tuples with the same prefix exist.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oddgreedy/exact.hpp"
#include "oddgreedy/greedy.hpp"
#include "oddgreedy/prefix_families.hpp"

namespace oddgreedy {

/// (x^2 + 3)/2 - x, the first odd value past the single-step bound for x.
inline Integer successor_base(const Integer& x) { return (x * x + 3) / 2 - x; }

/// x_m = const + lin*t1 + quad*t1^2 + step*t2.
struct XmPolynomial {
  Integer constant;
  Integer t1;
  Integer t1_squared;
  Integer t2;
};

struct BiFamily {
  std::vector<OddInt> prefix;
  Integer c1;
  OddInt b;
  Integer c2;

  OddInt x_penultimate(const Integer& t1) const { return OddInt{b.value() + 2 * t1}; }

  OddInt x_last(const Integer& t1, const Integer& t2) const {
    const Integer xp = b.value() + 2 * t1;
    return OddInt{successor_base(xp) + 2 * c2 + 2 * t2};
  }

  /// Expanded x_m in t1, t2: ((b+2t1)^2+3)/2 - (b+2t1) + 2c2 + 2t2.
  XmPolynomial xm_polynomial() const {
    const Integer& bv = b.value();
    return {successor_base(bv) + 2 * c2, 2 * bv - 2, 2, 2};
  }
};

struct BiFamilyMember {
  std::vector<OddInt> denominators;
  Fraction value;
};

namespace detail {

/// Smallest c >= 0 with base + 2c > q.
inline Integer minimal_offset(const Integer& base, const Fraction& q) {
  const Fraction gap = q - Fraction{base};
  if (gap < Fraction{0, 1}) return 0;
  return floor_div(gap.num(), 2 * gap.den()) + 1;
}

inline Fraction max_bound(std::span<const OddInt> xs, std::size_t i_max, std::size_t k) {
  Fraction q{0, 1};
  for (std::size_t i = 1; i <= i_max; ++i) {
    Fraction bound = xk_lower_bound(xs, i, k);
    if (i == 1 || bound > q) q = bound;
  }
  return q;
}

}  // namespace detail

/// Minimal c1, c2 for an admissible prefix of length m - 2 >= 1.
inline BiFamily two_step_family(std::span<const OddInt> prefix) {
  if (prefix.empty()) {
    throw std::invalid_argument("two-step families need a prefix of length at least 1 (m >= 3)");
  }
  require_admissible(prefix);
  const std::size_t len = prefix.size();  // m - 2
  const Integer& last = prefix.back().value();

  // c1: beat the k = m-1 bounds for i in [m-3]; vacuous when m = 3.
  Integer c1 = 0;
  if (len >= 2) {
    c1 = detail::minimal_offset(successor_base(last), detail::max_bound(prefix, len - 1, len + 1));
  }
  OddInt b{successor_base(last) + 2 * c1};

  // c2: beat the k = m bounds for i in [m-2] over prefix + [b].
  std::vector<OddInt> extended(prefix.begin(), prefix.end());
  extended.push_back(b);
  Integer c2 =
      detail::minimal_offset(successor_base(b.value()), detail::max_bound(extended, len, len + 2));

  return BiFamily{std::vector<OddInt>(prefix.begin(), prefix.end()), std::move(c1), std::move(b),
                  std::move(c2)};
}
inline BiFamily two_step_family(const std::vector<OddInt>& prefix) {
  return two_step_family(std::span<const OddInt>(prefix));
}

inline BiFamilyMember bi_family_member(const BiFamily& f, const Integer& t1, const Integer& t2) {
  if (t1 < 0 || t2 < 0) throw std::out_of_range("family parameters must be nonnegative");
  BiFamilyMember out;
  out.denominators = f.prefix;
  out.denominators.push_back(f.x_penultimate(t1));
  out.denominators.push_back(f.x_last(t1, t2));
  out.value = sum_of_reciprocals(out.denominators);
  return out;
}

/// Whether the bound on x_k from x_i..x_{k-1} strictly drops when x_{k-1}
/// grows by 2t. Expected to hold for every greedy xs.
inline bool decreasing_bound_check(std::span<const OddInt> xs, std::size_t i, std::size_t k,
                                   const Integer& t) {
  if (i < 1 || k < 3 || i > k - 2) {
    throw std::invalid_argument("decreasing_bound_check needs 1 <= i <= k-2, got i=" +
                                std::to_string(i) + " k=" + std::to_string(k));
  }
  if (xs.size() < k - 1) throw std::invalid_argument("need at least k-1 denominators");
  if (t < 1) throw std::invalid_argument("shift t must be positive");
  auto head = xs.first(k - 1);
  if (!is_greedy_sequence(head)) throw std::invalid_argument("xs is not a greedy sequence");
  std::vector<OddInt> shifted(head.begin(), head.end());
  shifted.back() = OddInt{shifted.back().value() + 2 * t};
  return xk_lower_bound(head, i, k) > xk_lower_bound(shifted, i, k);
}
inline bool decreasing_bound_check(const std::vector<OddInt>& xs, std::size_t i, std::size_t k,
                                   const Integer& t) {
  return decreasing_bound_check(std::span<const OddInt>(xs), i, k, t);
}

}  // namespace oddgreedy
