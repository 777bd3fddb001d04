#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oddgreedy/greedy.hpp"
#include "oddgreedy/prefix_families.hpp"
#include "oddgreedy/reduction.hpp"
#include "test_util.hpp"

namespace oddgreedy {
namespace {

using testing::odds;

// y = gcd(sigma_{m-1}, prod) for prefix + [xm], computed directly.
Integer direct_gcd(const std::vector<OddInt>& prefix, const Integer& xm) {
  std::vector<Integer> xs = to_integers(prefix);
  xs.push_back(xm);
  Integer prod = 1;
  for (const auto& x : xs) prod *= x;
  return gcd(sigma(static_cast<long>(xs.size()) - 1, xs), prod);
}

TEST(SigmaValuation, Examples) {
  EXPECT_EQ(sigma_valuation(odds({3, 9}), 3), 1U);
  EXPECT_EQ(sigma_valuation(odds({7, 11}), 5), 0U);
  // [5, 45, x3] with 5 not dividing x3: sigma_2 = 225 + 50 x3, v_5 = 2
  for (int x3 : {1, 3, 7, 9, 11, 13, 47}) {
    const auto xs = odds({5, 45, x3});
    EXPECT_EQ(sigma_valuation(xs, 5), vp(5, 225 + 50 * x3)) << x3;
  }
  EXPECT_THROW(sigma_valuation(std::vector<OddInt>{}, 3), std::invalid_argument);
}

TEST(SigmaValuation, FormulaAgreesOnRandomTuples) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto xs = testing::random_odd_tuple(rng, 1 + rng() % 4, 225);
    for (int p : {3, 5, 7, 11, 13}) {
      ASSERT_NO_THROW(sigma_valuation(xs, p));
    }
  }
}

TEST(SigmaValuation, LastEntryDominatesGivesPrefixValuation) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    auto xs = testing::random_odd_tuple(rng, 1 + rng() % 3, 225);
    for (int p : {3, 5, 7}) {
      const auto bound = gcd_valuation_bounds(xs, p);
      // x_m = p^{V+1} * unit makes v_p(x_m) > V_p
      int unit = 2 * static_cast<int>(rng() % 5) + 1;
      if (unit % p == 0) unit += 2;
      auto full = xs;
      full.emplace_back(ipow(Integer{p}, bound.max_valuation + 1) * unit);
      const auto m = static_cast<long>(full.size());
      ASSERT_EQ(vp(p, sigma(m - 1, full)), bound.prefix_valuation);
    }
  }
}

TEST(GcdValuationBounds, Examples) {
  auto b = gcd_valuation_bounds(odds({5}), 5);
  EXPECT_EQ(b.lower, 0);
  EXPECT_EQ(b.upper, 2);
  b = gcd_valuation_bounds(odds({5, 45}), 5);
  EXPECT_EQ(b.prefix_valuation, 2U);
  EXPECT_EQ(b.max_valuation, 1U);
  EXPECT_EQ(b.lower, 1);
  EXPECT_EQ(b.upper, 3);
  b = gcd_valuation_bounds(odds({3}), 7);
  EXPECT_EQ(b.lower, 0);
  EXPECT_EQ(b.upper, 0);
}

TEST(GcdValuationBounds, HoldOnRandomPrefixes) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto prefix = testing::random_odd_tuple(rng, 1 + rng() % 3, 135);
    const auto primes = relevant_primes(prefix);
    for (int xm = 1; xm <= 999; xm += 2 + 2 * static_cast<int>(rng() % 20)) {
      const Integer y = direct_gcd(prefix, xm);
      for (const auto& p : primes) {
        const auto b = gcd_valuation_bounds(prefix, p);
        const long v = vp(p, y);
        ASSERT_GE(v, b.lower);
        ASSERT_LE(v, b.upper);
      }
    }
  }
}

TEST(Attainability, Examples) {
  EXPECT_FALSE(attainability(odds({5, 45}), 5));
  EXPECT_TRUE(attainability(odds({5, 9}), 5));
  EXPECT_TRUE(attainability(odds({3}), 3));
  EXPECT_TRUE(attainability(odds({7}), 7));
  EXPECT_THROW(attainability(odds({5, 9}), 7), std::invalid_argument);
}

TEST(Attainability, FalseMeansNoExtremeInExhaustiveScan) {
  const auto prefix = odds({5, 45});
  const Integer p = 5;
  ASSERT_FALSE(attainability(prefix, p));
  const auto b = gcd_valuation_bounds(prefix, p);
  const Integer limit = 2 * ipow(p, 2 * b.max_valuation) * 225;
  for (Integer xm = 1; xm <= limit; xm += 2) {
    const long v = vp(p, direct_gcd(prefix, xm));
    ASSERT_NE(v, b.lower) << xm;
    ASSERT_NE(v, b.upper) << xm;
  }
}

TEST(CrtSolve, Examples) {
  EXPECT_EQ(crt_solve({Congruence{2, 3}, Congruence{3, 5}}, false), 8);
  EXPECT_EQ(crt_solve({Congruence{0, 7}}, true), 7);
  EXPECT_EQ(crt_solve({}, true), 1);
  EXPECT_EQ(crt_solve({}, false), 1);
}

TEST(CrtSolve, MatchesExhaustiveSearch) {
  const std::vector<int> moduli{3, 5, 7, 9, 25, 11};
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Congruence> system;
    int total = 1;
    for (int m : moduli) {
      if (rng() % 2 == 0) continue;
      if (std::gcd(total, m) != 1) continue;
      system.emplace_back(static_cast<int>(rng() % m), m);
      total *= m;
    }
    for (bool odd : {false, true}) {
      int expected = 0;
      for (int x = 1; x <= 2 * total; ++x) {
        bool fits = !odd || x % 2 == 1;
        for (const auto& c : system) fits = fits && Integer{x} % c.modulus() == c.residue();
        if (fits) {
          expected = x;
          break;
        }
      }
      ASSERT_EQ(crt_solve(system, odd), expected);
    }
  }
}

TEST(CrtSolve, Errors) {
  EXPECT_THROW(crt_solve({Congruence{1, 3}, Congruence{2, 9}}, false), std::invalid_argument);
  EXPECT_THROW(crt_solve({Congruence{1, 4}}, true), std::invalid_argument);
  EXPECT_THROW(Congruence(5, 3), std::invalid_argument);
  EXPECT_THROW(Congruence(0, 0), std::invalid_argument);
}

void expect_extreme(const std::vector<OddInt>& prefix, Extreme which) {
  const OddInt xm = construct_extremal_xm(prefix, which);
  const Integer y = direct_gcd(prefix, xm.value());
  for (const auto& p : relevant_primes(prefix)) {
    const auto b = gcd_valuation_bounds(prefix, p);
    EXPECT_EQ(static_cast<long>(vp(p, y)), which == Extreme::Lower ? b.lower : b.upper)
        << "p=" << p << " xm=" << xm;
  }
}

TEST(ConstructExtremalXm, LowerAndUpperHitBoundsExactly) {
  for (const auto& prefix : {odds({5, 9}), odds({3}), odds({3, 5}), odds({5}), odds({9}),
                             odds({15}), odds({3, 25}), odds({5, 9, 47})}) {
    expect_extreme(prefix, Extreme::Lower);
    expect_extreme(prefix, Extreme::Upper);
  }
}

TEST(ConstructExtremalXm, UpperForThreeGivesNine) {
  const OddInt xm = construct_extremal_xm(odds({3}), Extreme::Upper);
  EXPECT_EQ(direct_gcd(odds({3}), xm.value()), 9);
  // least such x_2 from a direct scan
  int first = 0;
  for (int x2 = 1; x2 <= 99 && first == 0; x2 += 2) {
    if (gcd(Integer{3 + x2}, Integer{3 * x2}) == 9) first = x2;
  }
  EXPECT_EQ(xm.value(), first);
}

TEST(ConstructExtremalXm, UnattainableNamesThePrime) {
  for (auto which : {Extreme::Lower, Extreme::Upper}) {
    try {
      construct_extremal_xm(odds({5, 45}), which);
      FAIL() << "expected UnattainableError";
    } catch (const UnattainableError& e) {
      EXPECT_EQ(e.prime(), 5);
    }
  }
}

TEST(ConstructExtremalXm, SoundOnRandomAttainablePrefixes) {
  std::mt19937_64 rng(31);
  int built = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto prefix = testing::random_odd_tuple(rng, 1 + rng() % 3, 225);
    bool all = true;
    for (const auto& p : relevant_primes(prefix)) all = all && attainability(prefix, p);
    if (!all) {
      EXPECT_THROW(construct_extremal_xm(prefix, Extreme::Lower), UnattainableError);
      continue;
    }
    ++built;
    expect_extreme(prefix, Extreme::Lower);
    expect_extreme(prefix, Extreme::Upper);
  }
  EXPECT_GT(built, 50);
}

TEST(LengthTwoGcd, DividesFirstSquared) {
  for (int x1 = 1; x1 <= 51; x1 += 2) {
    for (int x2 = 1; x2 <= 999; x2 += 2) {
      const Integer y = gcd(Integer{x1 + x2}, Integer{x1 * x2});
      ASSERT_EQ(Integer{x1 * x1} % y, 0) << x1 << "," << x2;
    }
  }
}

TEST(Fixed1Length2ReducedForms, ExampleFive) {
  const auto forms = fixed1_length2_reduced_forms(5);
  ASSERT_EQ(forms.size(), 3U);
  EXPECT_EQ(forms[0].y, 1);
  EXPECT_EQ(to_string(forms[0].family), "(14+2u)/(45+10u)");
  EXPECT_EQ(forms[1].y, 5);
  EXPECT_EQ(to_string(forms[1].family), "(4+2u)/(15+10u)");
  EXPECT_EQ(forms[2].y, 25);
  EXPECT_EQ(to_string(forms[2].family), "(2+2u)/(9+10u)");
}

TEST(Fixed1Length2ReducedForms, MembersBelongToTheUnreducedFamily) {
  for (int x1 = 1; x1 <= 45; x1 += 2) {
    const AffineFamily base = fixed1_length2_family(x1);
    const Integer sq = Integer{x1} * x1;
    for (const auto& form : fixed1_length2_reduced_forms(x1)) {
      const Integer c = ceil_div(sq + 3, 4 * form.y);
      for (int u = 0; u <= 8; ++u) {
        const Integer t = form.y * c - (sq + 3) / 4 + form.y * u;
        ASSERT_GE(t, 0);
        const Fraction big = family_member(base, t);
        const Fraction small = family_member(form.family, u);
        ASSERT_EQ(big, small);
        ASSERT_EQ(big.num(), small.num() * form.y);
        ASSERT_EQ(big.den(), small.den() * form.y);
      }
    }
  }
}

TEST(Fixed1Length2ReducedForms, EveryReducedValueIsCovered) {
  for (int x1 = 1; x1 <= 25; x1 += 2) {
    const AffineFamily base = fixed1_length2_family(x1);
    const auto forms = fixed1_length2_reduced_forms(x1);
    for (int t = 0; t <= 200; ++t) {
      const Fraction r = family_member(base, t).reduced();
      bool covered = false;
      for (const auto& form : forms) {
        // r = (A + 2u) / (C + 2 x1 u) for some u >= 0
        const Integer du = r.num() - form.family.num_const;
        if (du < 0 || du % 2 != 0) continue;
        const Integer u = du / 2;
        covered = covered || family_member(form.family, u).same_representation(r);
      }
      ASSERT_TRUE(covered) << "x1=" << x1 << " t=" << t << " " << r;
    }
  }
}

}  // namespace
}  // namespace oddgreedy
