#pragma once

// Exact arithmetic substrate: arbitrary-precision integers, unreduced
// fractions, elementary symmetric polynomials and p-adic valuations.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace oddgreedy {

using Integer = boost::multiprecision::mpz_int;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Floor of a/b for b > 0 (integer division truncates toward zero).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

/// Ceiling of a/b for b > 0.
inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

inline Integer ipow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline bool is_odd(const Integer& v) { return boost::multiprecision::bit_test(v, 0); }

/// Odd positive integer. Construction validates the invariant.
class OddInt {
 public:
  OddInt(std::int64_t v) : OddInt(Integer{v}) {}  // NOLINT(google-explicit-constructor)
  explicit OddInt(Integer v) : value_(std::move(v)) {
    if (value_ < 1 || !is_odd(value_)) {
      throw std::invalid_argument("expected an odd positive integer, got " + value_.str());
    }
  }

  const Integer& value() const noexcept { return value_; }

  friend bool operator==(const OddInt&, const OddInt&) = default;
  friend auto operator<=>(const OddInt& a, const OddInt& b) {
    return a.value_ < b.value_   ? std::strong_ordering::less
           : b.value_ < a.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const OddInt& x) { return os << x.value_; }

 private:
  Integer value_;
};

inline const Integer& as_integer(const Integer& x) noexcept { return x; }
inline const Integer& as_integer(const OddInt& x) noexcept { return x.value(); }

inline std::vector<Integer> to_integers(std::span<const OddInt> xs) {
  std::vector<Integer> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.value());
  return out;
}

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (!is_odd(n)) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// p^e with p verified prime by trial division.
class PrimePower {
 public:
  PrimePower(Integer p, unsigned e) : p_(std::move(p)), e_(e) {
    if (!is_prime(p_)) throw std::invalid_argument(p_.str() + " is not prime");
  }

  const Integer& prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return e_; }
  Integer value() const { return ipow(p_, e_); }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  Integer p_;
  unsigned e_;
};

/// Exact rational num/den with den > 0. Values produced by formulas are kept
/// exactly as built; reduced() gives the lowest-terms form.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("fraction with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
  explicit Fraction(Integer whole) : num_(std::move(whole)), den_(1) {}

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  Fraction reduced() const {
    if (num_ == 0) return Fraction{0, 1};
    Integer g = gcd(num_, den_);
    return Fraction{num_ / g, den_ / g};
  }
  bool is_reduced() const { return gcd(num_, den_) == 1; }

  /// True when both fields match, not merely the value.
  bool same_representation(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }

  Integer floor() const { return floor_div(num_, den_); }

  std::string str() const { return num_.str() + "/" + den_.str(); }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction{a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return Fraction{a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction{a.num_ * b.num_, a.den_ * b.den_};
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    return lhs < rhs ? std::strong_ordering::less
           : rhs < lhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

 private:
  Integer num_;
  Integer den_;
};

/// Elementary symmetric polynomial of degree k. Zero for k < 0 or k > |xs|,
/// one for k = 0. One pass of e_j += x * e_{j-1} per element.
template <typename T>
Integer sigma(long k, std::span<const T> xs) {
  if (k < 0 || static_cast<std::size_t>(k) > xs.size()) return 0;
  std::vector<Integer> e(static_cast<std::size_t>(k) + 1, Integer{0});
  e[0] = 1;
  std::size_t seen = 0;
  for (const auto& x : xs) {
    ++seen;
    for (std::size_t j = std::min<std::size_t>(seen, e.size() - 1); j >= 1; --j) {
      e[j] += as_integer(x) * e[j - 1];
    }
  }
  return e.back();
}

inline Integer sigma(long k, const std::vector<Integer>& xs) {
  return sigma<Integer>(k, std::span<const Integer>(xs));
}
inline Integer sigma(long k, const std::vector<OddInt>& xs) {
  return sigma<OddInt>(k, std::span<const OddInt>(xs));
}

template <typename T>
Integer product(std::span<const T> xs) {
  Integer p = 1;
  for (const auto& x : xs) p *= as_integer(x);
  return p;
}

/// Exponent of the largest power of p dividing n.
inline unsigned vp(const Integer& p, Integer n) {
  if (p < 2) throw std::invalid_argument("valuation base must be a prime, got " + p.str());
  if (n == 0) throw std::domain_error("p-adic valuation of 0 is undefined");
  if (n < 0) n = -n;
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

/// sigma_{m-1}(xs) / prod(xs), unreduced. Empty input gives 0/1.
template <typename T>
Fraction sum_of_reciprocals(std::span<const T> xs) {
  if (xs.empty()) return Fraction{0, 1};
  for (const auto& x : xs) {
    if (as_integer(x) < 1) throw std::invalid_argument("denominators must be positive");
  }
  return Fraction{sigma<T>(static_cast<long>(xs.size()) - 1, xs), product<T>(xs)};
}

inline Fraction sum_of_reciprocals(const std::vector<OddInt>& xs) {
  return sum_of_reciprocals<OddInt>(std::span<const OddInt>(xs));
}
inline Fraction sum_of_reciprocals(const std::vector<Integer>& xs) {
  return sum_of_reciprocals<Integer>(std::span<const Integer>(xs));
}

/// Prime factorization by trial division, primes ascending.
inline std::vector<PrimePower> factorize(Integer n) {
  if (n < 1) throw std::invalid_argument("factorize expects a positive integer");
  std::vector<PrimePower> out;
  auto pull = [&](const Integer& p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  pull(2);
  for (Integer d = 3; d * d <= n; d += 2) pull(d);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime());
  return out;
}

/// All positive divisors, ascending.
inline std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& pp : factorize(n)) {
    const std::size_t base = out.size();
    Integer power = 1;
    for (unsigned e = 1; e <= pp.exponent(); ++e) {
      power *= pp.prime();
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oddgreedy
