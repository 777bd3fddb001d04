#pragma once

// The odd greedy algorithm and the inequality criteria that decide whether a
// denominator tuple is the odd greedy expansion of its own reciprocal sum.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oddgreedy/exact.hpp"

namespace oddgreedy {

enum class ExpansionStatus { Terminated, StepCapReached };

inline const char* to_string(ExpansionStatus s) {
  return s == ExpansionStatus::Terminated ? "terminated" : "step-cap";
}

class StepCap {
 public:
  static constexpr std::size_t kDefault = 64;

  explicit StepCap(std::size_t max_steps = kDefault) : max_steps_(max_steps) {
    if (max_steps_ < 1) throw std::invalid_argument("step cap must be at least 1");
  }
  std::size_t max_steps() const noexcept { return max_steps_; }

 private:
  std::size_t max_steps_;
};

struct Expansion {
  std::vector<OddInt> denominators;
  ExpansionStatus status = ExpansionStatus::Terminated;
  /// Remainder after each step; filled only when a trace was requested.
  std::vector<Fraction> remainders;

  std::size_t length() const noexcept { return denominators.size(); }
  bool terminated() const noexcept { return status == ExpansionStatus::Terminated; }
};

/// Denominator of the largest odd unit fraction not exceeding r: 1 when
/// r >= 1, otherwise the odd x >= 3 with 1/x <= r < 1/(x-2).
inline OddInt odd_greedy_step(const Fraction& r) {
  if (r.num() <= 0) throw std::domain_error("odd greedy step needs a positive remainder");
  if (r.num() >= r.den()) return OddInt{1};
  Integer x = ceil_div(r.den(), r.num());
  if (!is_odd(x)) ++x;
  // 1/x <= n/d  <=>  d <= n x;   n/d < 1/(x-2)  <=>  n (x-2) < d
  if (r.den() > r.num() * x || r.num() * (x - 2) >= r.den()) {
    throw std::logic_error("odd greedy step violated its defining inequalities for " + r.str());
  }
  return OddInt{std::move(x)};
}

inline Expansion odd_greedy_expand(const Fraction& q, StepCap cap = StepCap{},
                                   bool trace = false) {
  if (q.num() <= 0) throw std::domain_error("odd greedy expansion needs a positive rational");
  Fraction r = q.reduced();
  if (!is_odd(r.den())) {
    throw std::domain_error("no odd unit-fraction expansion exists for " + q.str() +
                            " (even reduced denominator)");
  }
  Expansion out;
  while (r.num() != 0) {
    if (out.denominators.size() == cap.max_steps()) {
      out.status = ExpansionStatus::StepCapReached;
      return out;
    }
    OddInt x = odd_greedy_step(r);
    r = (r - Fraction{1, x.value()}).reduced();
    out.denominators.push_back(std::move(x));
    if (trace) out.remainders.push_back(r);
  }
  out.status = ExpansionStatus::Terminated;
  return out;
}

/// 1-based (i, k) of the first failing pairwise inequality
/// 2 sigma_{k-i}(x_i..x_k) > x_i^2 sigma_{k-i-1}(x_{i+1}..x_k), or nullopt.
inline std::optional<std::pair<std::size_t, std::size_t>> first_greedy_violation(
    std::span<const OddInt> xs) {
  if (xs.empty()) throw std::invalid_argument("empty denominator list");
  const std::size_t m = xs.size();
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t i = 1; i <= k; ++i) {
      auto run = xs.subspan(i - 1, k - i + 1);
      const auto kk = static_cast<long>(k - i);
      const Integer& xi = xs[i - 1].value();
      if (2 * sigma<OddInt>(kk, run) <= xi * xi * sigma<OddInt>(kk - 1, run.subspan(1))) {
        return std::pair{i, k};
      }
    }
  }
  return std::nullopt;
}

inline bool is_greedy_sequence(std::span<const OddInt> xs) {
  return !first_greedy_violation(xs).has_value();
}
inline bool is_greedy_sequence(const std::vector<OddInt>& xs) {
  return is_greedy_sequence(std::span<const OddInt>(xs));
}

/// Lower bound on x_k implied by x_i..x_{k-1} (1-based, i < k <= |xs|+1):
/// (x_i - 2) x_i...x_{k-1} / (2 sigma_{k-i-1}(x_i..x_{k-1}) - x_i^2 sigma_{k-i-2}(x_{i+1}..x_{k-1})).
inline Fraction xk_lower_bound(std::span<const OddInt> xs, std::size_t i, std::size_t k) {
  if (i < 1 || i >= k || k > xs.size() + 1) {
    throw std::out_of_range("xk_lower_bound needs 1 <= i < k <= |xs|+1, got i=" +
                            std::to_string(i) + " k=" + std::to_string(k));
  }
  auto run = xs.subspan(i - 1, k - i);
  const auto deg = static_cast<long>(k - i - 1);
  const Integer& xi = xs[i - 1].value();
  Integer den = 2 * sigma<OddInt>(deg, run) - xi * xi * sigma<OddInt>(deg - 1, run.subspan(1));
  if (den <= 0) {
    throw std::domain_error("prefix is not a greedy sequence (bound denominator " + den.str() +
                            " at i=" + std::to_string(i) + ", k=" + std::to_string(k) + ")");
  }
  return Fraction{(xi - 2) * product<OddInt>(run), std::move(den)};
}

inline Fraction xk_lower_bound(const std::vector<OddInt>& xs, std::size_t i, std::size_t k) {
  return xk_lower_bound(std::span<const OddInt>(xs), i, k);
}

/// The lower-bound form of the criterion: x_k > xk_lower_bound(xs, i, k) for
/// all i < k <= m, checked in increasing k so every bound denominator is
/// positive by the time it is evaluated.
inline bool satisfies_lower_bounds(std::span<const OddInt> xs) {
  if (xs.empty()) throw std::invalid_argument("empty denominator list");
  for (std::size_t k = 2; k <= xs.size(); ++k) {
    for (std::size_t i = 1; i < k; ++i) {
      if (Fraction{xs[k - 1].value()} <= xk_lower_bound(xs.first(k - 1), i, k)) return false;
    }
  }
  return true;
}

}  // namespace oddgreedy
