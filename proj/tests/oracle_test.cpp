#include <gtest/gtest.h>

#include "oddgreedy/crosscheck.hpp"
#include "oddgreedy/oracle.hpp"
#include "test_util.hpp"

namespace oddgreedy {
namespace {

using testing::odds;

ScanWindow window(int n_min, int n_max, int d_max) {
  ScanWindow w;
  w.numerator_min = n_min;
  w.numerator_max = n_max;
  w.max_denominator = d_max;
  return w;
}

const LengthRow& row_for(const ScanReport& s, int n, int d) {
  for (const auto& r : s.length_rows) {
    if (r.n == n && r.d == d) return r;
  }
  throw std::runtime_error("row not found");
}

// The linear-time row check must agree with the sigma forms of the criterion.
TEST(CheckExpansion, AgreesWithInequalityCriterion) {
  testing::for_each_odd_tuple(4, 15, [](const std::vector<OddInt>& xs) {
    const Fraction q = sum_of_reciprocals(xs);
    const std::string issue = detail::check_expansion(q.num(), q.den(), to_integers(xs));
    const bool greedy = is_greedy_sequence(xs);
    EXPECT_EQ(issue.empty(), greedy) << "tuple of length " << xs.size();
    if (!greedy) EXPECT_EQ(issue, "output fails the greedy inequality criterion");
  });
}

TEST(CheckExpansion, DetectsInexactSum) {
  EXPECT_EQ(detail::check_expansion(7, 15, {3, 9, 47}), "sum of reciprocals differs from input");
  EXPECT_EQ(detail::check_expansion(7, 15, {3, 9, 45}), "");
}

TEST(ScanLengths, NumeratorTwoLengthTwoSet) {
  ScanReport s = scan_lengths(window(2, 2, 101));
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.cap_hits, 0U);
  for (const auto& r : s.length_rows) {
    const int d = r.d.convert_to<int>();
    EXPECT_EQ(r.length() == 2, d % 4 == 1 || d % 12 == 3) << d;
  }
  EXPECT_EQ(apply_length2_crosscheck(s), s.length_rows.size());
  EXPECT_TRUE(s.ok());
}

TEST(ScanLengths, KnownRows) {
  const ScanReport s = scan_lengths(window(1, 7, 45));
  EXPECT_EQ(row_for(s, 7, 15).length(), 3U);
  EXPECT_EQ(row_for(s, 1, 9).length(), 1U);
  EXPECT_EQ(row_for(s, 1, 9).denominators, (std::vector<Integer>{9}));
  // only reduced fractions are scanned
  for (const auto& r : s.length_rows) EXPECT_EQ(gcd(r.n, r.d), 1);
}

TEST(ScanLengths, CountsAddUp) {
  ScanWindow w = window(1, 9, 99);
  w.max_length = 3;
  w.expect_length = 2;
  const ScanReport s = scan_lengths(w);
  std::size_t total = 0;
  for (const auto& [len, c] : s.length_counts) {
    EXPECT_LE(len, 4U);
    total += c;
  }
  EXPECT_EQ(total + s.cap_hits, s.length_rows.size());
  std::size_t twos = 0;
  for (const auto& r : s.length_rows) twos += r.length() == 2 ? 1 : 0;
  EXPECT_EQ(s.expect_length_hits, twos);
}

TEST(ScanLengths, OddNumeratorsNeverHaveEvenLength) {
  ScanWindow w = window(7, 7, 99);
  w.expect_length = 2;
  const ScanReport s = scan_lengths(w);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.expect_length_hits, 0U);
}

TEST(ScanLengths, StepCapIsRecordedNotFatal) {
  ScanWindow w = window(3, 3, 179);
  w.cap = StepCap{5};
  const ScanReport s = scan_lengths(w);
  EXPECT_GT(s.cap_hits, 0U);
  EXPECT_EQ(row_for(s, 3, 179).status, ExpansionStatus::StepCapReached);
  EXPECT_TRUE(s.ok());
}

TEST(ScanLengths, PartitioningDoesNotChangeResults) {
  const ScanReport one = scan_lengths(window(1, 12, 151), 1);
  const ScanReport four = scan_lengths(window(1, 12, 151), 4);
  EXPECT_EQ(one.length_rows, four.length_rows);
  EXPECT_EQ(one.length_counts, four.length_counts);
  EXPECT_EQ(one.claims_checked, four.claims_checked);
}

TEST(ScanLengths, WindowValidation) {
  EXPECT_THROW(scan_lengths(window(3, 2, 99)), std::invalid_argument);
  EXPECT_THROW(scan_lengths(window(0, 2, 99)), std::invalid_argument);
  EXPECT_THROW(scan_lengths(window(1, 2, 1)), std::invalid_argument);
}

TEST(ScanGcdBounds, FiveFortyFiveNeverHitsExtremes) {
  const ScanReport s = scan_gcd_bounds(odds({5, 45}), 1125);
  EXPECT_TRUE(s.ok());
  for (const auto& p : s.primes) {
    if (p.p != 5) continue;
    EXPECT_EQ(p.lower, 1);
    EXPECT_EQ(p.upper, 3);
    EXPECT_FALSE(p.lower_attained);
    EXPECT_FALSE(p.upper_attained);
    EXPECT_EQ(p.histogram.count(1), 0U);
    EXPECT_EQ(p.histogram.count(3), 0U);
  }
}

TEST(ScanGcdBounds, FiveNineHitsBothExtremes) {
  const ScanReport s = scan_gcd_bounds(odds({5, 9}), 999);
  EXPECT_TRUE(s.ok());
  ASSERT_EQ(s.primes.size(), 2U);
  for (const auto& p : s.primes) {
    EXPECT_TRUE(p.lower_attained) << p.p;
    EXPECT_TRUE(p.upper_attained) << p.p;
  }
}

TEST(ScanGcdBounds, ThreeGivesDivisorsOfNine) {
  const ScanReport s = scan_gcd_bounds(odds({3}), 99);
  EXPECT_TRUE(s.ok());
  for (const auto& r : s.gcd_rows) EXPECT_EQ(9 % r.y, 0) << r.xm;
}

TEST(ScanGcdBounds, PartitioningDoesNotChangeResults) {
  const ScanReport one = scan_gcd_bounds(odds({5, 9}), 501, 1);
  const ScanReport three = scan_gcd_bounds(odds({5, 9}), 501, 3);
  EXPECT_EQ(one.gcd_rows, three.gcd_rows);
  EXPECT_EQ(one.primes, three.primes);
}

TEST(ScanGcdBounds, Errors) {
  EXPECT_THROW(scan_gcd_bounds(odds({5, 9, 45}), 99), std::invalid_argument);
  EXPECT_THROW(scan_gcd_bounds(odds({5}), 100), std::invalid_argument);
  EXPECT_THROW(scan_gcd_bounds(std::vector<OddInt>{}, 99), std::invalid_argument);
}

TEST(Length2Membership, FindsParameters) {
  const auto fs = length2_families(6, true);
  const auto hit = length2_membership(fs, 85);  // 25 + 60
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->r, 5);
  EXPECT_EQ(hit->t, 1);
  EXPECT_FALSE(length2_membership(fs, 3).has_value());
}

}  // namespace
}  // namespace oddgreedy
