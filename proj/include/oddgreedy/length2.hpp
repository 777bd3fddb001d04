#pragma once

// Fractions n/d with a fixed even numerator whose odd greedy expansion has
// exactly two terms.

#include <vector>

#include "oddgreedy/exact.hpp"
#include "oddgreedy/family.hpp"

namespace oddgreedy {

struct Length2Witness {
  OddInt r;
  /// One entry p^a per prime divisor p of r; a may be zero.
  std::vector<PrimePower> exponents;

  /// prod p^a, the forced divisor of the first denominator.
  Integer multiplier() const {
    Integer m = 1;
    for (const auto& pp : exponents) m *= pp.value();
    return m;
  }
};

struct Length2Family {
  Length2Witness witness;
  AffineFamily family;
};

/// Exponents a_p = max(ceil((v_p(r) - v_p(n)) / 2), 0) over the primes of r.
/// With coprime_form the v_p(n) term is dropped, which agrees whenever
/// gcd(n, r) = 1.
inline std::vector<PrimePower> length2_exponents(const Integer& n, const OddInt& r,
                                                 bool coprime_form) {
  std::vector<PrimePower> out;
  for (const auto& pp : factorize(r.value())) {
    const long vr = pp.exponent();
    const long vn = coprime_form ? 0 : static_cast<long>(vp(pp.prime(), n));
    long a = static_cast<long>(ceil_div(Integer{vr - vn}, Integer{2}));
    if (a < 0) a = 0;
    out.emplace_back(pp.prime(), static_cast<unsigned>(a));
  }
  return out;
}

/// One family n / (n M (1 + 2t) - r) for every odd r < 2n (coprime to n when
/// reduced_only), sorted by r.
inline std::vector<Length2Family> length2_families(const Integer& n, bool reduced_only) {
  if (n < 2 || is_odd(n)) {
    throw std::invalid_argument("length-2 families need an even numerator >= 2, got " + n.str() +
                                " (an odd numerator has no length-2 expansion)");
  }
  std::vector<Length2Family> out;
  for (Integer r = 1; r < 2 * n; r += 2) {
    if (reduced_only && gcd(r, n) != 1) continue;
    Length2Witness w{OddInt{r}, length2_exponents(n, OddInt{r}, reduced_only)};
    const Integer nm = n * w.multiplier();
    AffineFamily f{n, 0, nm - r, 2 * nm, "t"};
    out.push_back({std::move(w), std::move(f)});
  }
  return out;
}

inline std::vector<Length2Family> length2_families(std::int64_t n, bool reduced_only) {
  return length2_families(Integer{n}, reduced_only);
}

}  // namespace oddgreedy
