#pragma once

// How sums of reciprocals reduce: valuations of sigma_{m-1}, bounds on
// y = gcd(sigma_{m-1}(x_1..x_m), x_1...x_m) in terms of the prefix, when the
// bounds are attained, and CRT construction of attaining x_m.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddgreedy/exact.hpp"
#include "oddgreedy/family.hpp"

namespace oddgreedy {

struct ValuationBound {
  Integer p;
  unsigned max_valuation = 0;      ///< V_p, max of v_p over the prefix
  unsigned prefix_valuation = 0;   ///< v_p of the prefix product
  long lower = 0;
  long upper = 0;
};

class Congruence {
 public:
  Congruence(Integer residue, Integer modulus)
      : residue_(std::move(residue)), modulus_(std::move(modulus)) {
    if (modulus_ < 1) throw std::invalid_argument("congruence modulus must be positive");
    if (residue_ < 0 || residue_ >= modulus_) {
      throw std::invalid_argument("residue " + residue_.str() + " outside [0, " + modulus_.str() +
                                  ")");
    }
  }

  const Integer& residue() const noexcept { return residue_; }
  const Integer& modulus() const noexcept { return modulus_; }

 private:
  Integer residue_;
  Integer modulus_;
};

/// Thrown when some prime dividing the prefix fails the attainability test.
class UnattainableError : public std::domain_error {
 public:
  explicit UnattainableError(Integer p)
      : std::domain_error("valuation bounds not attainable at prime " + p.str()), prime_(p) {}
  const Integer& prime() const noexcept { return prime_; }

 private:
  Integer prime_;
};

enum class Extreme { Lower, Upper };

inline const char* to_string(Extreme e) { return e == Extreme::Lower ? "lower" : "upper"; }

namespace detail {

inline Integer strip(const Integer& x, const Integer& p, unsigned v) { return x / ipow(p, v); }

/// sum_i p^{W - v_p(x_i)} prod_{j != i} x_j / p^{v_p(x_j)}
inline Integer weighted_unit_sum(std::span<const OddInt> xs, const Integer& p, unsigned w) {
  std::vector<unsigned> v;
  std::vector<Integer> units;
  for (const auto& x : xs) {
    v.push_back(vp(p, x.value()));
    units.push_back(strip(x.value(), p, v.back()));
  }
  Integer total = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Integer term = ipow(p, w - v[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j != i) term *= units[j];
    }
    total += term;
  }
  return total;
}

inline unsigned max_valuation(std::span<const OddInt> xs, const Integer& p) {
  unsigned w = 0;
  for (const auto& x : xs) w = std::max(w, vp(p, x.value()));
  return w;
}

// Inverse of a modulo m, gcd(a, m) = 1.
inline Integer mod_inverse(Integer a, const Integer& m) {
  Integer old_r = ((a % m) + m) % m, r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("no modular inverse of " + a.str() + " mod " + m.str());
  return ((old_s % m) + m) % m;
}

inline Integer mod(const Integer& a, const Integer& m) { return ((a % m) + m) % m; }

}  // namespace detail

/// v_p(sigma_{m-1}(xs)) by direct division, cross-checked against
/// v_p(prod) - W_p + v_p(weighted unit sum).
inline unsigned sigma_valuation(std::span<const OddInt> xs, const Integer& p) {
  if (xs.empty()) throw std::invalid_argument("sigma_valuation needs at least one entry");
  const auto m = static_cast<long>(xs.size());
  const unsigned direct = vp(p, sigma<OddInt>(m - 1, xs));
  const unsigned w = detail::max_valuation(xs, p);
  const unsigned via_formula =
      vp(p, product<OddInt>(xs)) - w + vp(p, detail::weighted_unit_sum(xs, p, w));
  if (direct != via_formula) {
    throw std::logic_error("sigma valuation mismatch at p=" + p.str() + ": direct " +
                           std::to_string(direct) + " vs formula " + std::to_string(via_formula));
  }
  return direct;
}
inline unsigned sigma_valuation(const std::vector<OddInt>& xs, const Integer& p) {
  return sigma_valuation(std::span<const OddInt>(xs), p);
}

/// v_p(prod prefix) - V_p <= v_p(y) <= v_p(prod prefix) + V_p for every x_m.
inline ValuationBound gcd_valuation_bounds(std::span<const OddInt> prefix, const Integer& p) {
  if (prefix.empty()) throw std::invalid_argument("gcd bounds need a nonempty prefix");
  ValuationBound b;
  b.p = p;
  b.max_valuation = detail::max_valuation(prefix, p);
  b.prefix_valuation = vp(p, product<OddInt>(prefix));
  b.lower = static_cast<long>(b.prefix_valuation) - static_cast<long>(b.max_valuation);
  b.upper = static_cast<long>(b.prefix_valuation) + static_cast<long>(b.max_valuation);
  return b;
}
inline ValuationBound gcd_valuation_bounds(const std::vector<OddInt>& prefix, const Integer& p) {
  return gcd_valuation_bounds(std::span<const OddInt>(prefix), p);
}

/// Primes dividing at least one prefix entry, ascending.
inline std::vector<Integer> relevant_primes(std::span<const OddInt> prefix) {
  std::vector<Integer> out;
  for (const auto& x : prefix) {
    for (auto& p : prime_divisors(x.value())) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// True iff p does not divide sum_i p^{V_p - v_p(x_i)} prod_{j != i} x_j / p^{v_p(x_j)}.
inline bool attainability(std::span<const OddInt> prefix, const Integer& p) {
  if (prefix.empty()) throw std::invalid_argument("attainability needs a nonempty prefix");
  const unsigned w = detail::max_valuation(prefix, p);
  if (w == 0) {
    throw std::invalid_argument("prime " + p.str() + " divides no prefix entry");
  }
  return detail::weighted_unit_sum(prefix, p, w) % p != 0;
}
inline bool attainability(const std::vector<OddInt>& prefix, const Integer& p) {
  return attainability(std::span<const OddInt>(prefix), p);
}

/// Least positive solution of a system with pairwise coprime moduli; with
/// force_odd the congruence x = 1 mod 2 is added.
inline Integer crt_solve(const std::vector<Congruence>& congruences, bool force_odd) {
  std::vector<Congruence> system = congruences;
  if (force_odd) {
    for (const auto& c : system) {
      if (!is_odd(c.modulus())) {
        throw std::invalid_argument("force_odd needs odd moduli, got " + c.modulus().str());
      }
    }
    system.emplace_back(1, 2);
  }
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      if (gcd(system[i].modulus(), system[j].modulus()) != 1) {
        throw std::invalid_argument("moduli " + system[i].modulus().str() + " and " +
                                    system[j].modulus().str() + " are not coprime");
      }
    }
  }
  // x = b_k mod M_k, extended one modulus at a time.
  Integer x = 0;
  Integer mod_so_far = 1;
  for (const auto& c : system) {
    const Integer z = detail::mod(
        (c.residue() - x) * detail::mod_inverse(mod_so_far, c.modulus()), c.modulus());
    x += mod_so_far * z;
    mod_so_far *= c.modulus();
    x = detail::mod(x, mod_so_far);
  }
  return x == 0 ? mod_so_far : x;
}

/// Odd x_m at which v_p(y) hits the chosen bound for every prime dividing the
/// prefix simultaneously.
inline OddInt construct_extremal_xm(std::span<const OddInt> prefix, Extreme which) {
  if (prefix.empty()) throw std::invalid_argument("extremal construction needs a nonempty prefix");
  std::vector<Congruence> system;
  for (const auto& p : relevant_primes(prefix)) {
    if (!attainability(prefix, p)) throw UnattainableError(p);
    if (which == Extreme::Lower) {
      // any x_m prime to p
      system.emplace_back(1, p);
      continue;
    }
    // x_m = p^V x' with S x' = -U (mod p^V), pinned modulo p^{2V} so v_p(x_m) = V exactly.
    const unsigned w = detail::max_valuation(prefix, p);
    const Integer pw = ipow(p, w);
    const Integer s = detail::weighted_unit_sum(prefix, p, w);
    Integer u = 1;
    for (const auto& x : prefix) u *= detail::strip(x.value(), p, vp(p, x.value()));
    const Integer xprime = detail::mod(-u * detail::mod_inverse(s, pw), pw);
    system.emplace_back(pw * xprime, pw * pw);
  }
  return OddInt{crt_solve(system, true)};
}
inline OddInt construct_extremal_xm(const std::vector<OddInt>& prefix, Extreme which) {
  return construct_extremal_xm(std::span<const OddInt>(prefix), which);
}

struct ReducedForm {
  Integer y;
  AffineFamily family;
};

/// For each divisor y of x1^2, with c = ceil((x1^2+3)/(4y)):
/// (2c + 2u) / (2 x1 c - x1^2/y + 2 x1 u).
inline std::vector<ReducedForm> fixed1_length2_reduced_forms(const OddInt& x1) {
  const Integer& x = x1.value();
  const Integer sq = x * x;
  std::vector<ReducedForm> out;
  for (const auto& y : divisors(sq)) {
    const Integer c = ceil_div(sq + 3, 4 * y);
    out.push_back({y, AffineFamily{2 * c, 2, 2 * x * c - sq / y, 2 * x, "u"}});
  }
  return out;
}

}  // namespace oddgreedy
