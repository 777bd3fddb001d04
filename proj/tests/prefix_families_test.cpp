#include <gtest/gtest.h>

#include "oddgreedy/crosscheck.hpp"
#include "oddgreedy/greedy.hpp"
#include "oddgreedy/prefix_families.hpp"
#include "test_util.hpp"

namespace oddgreedy {
namespace {

using testing::odds;

TEST(ThresholdB, Examples) {
  EXPECT_EQ(threshold_b(odds({3, 5})), OddInt{9});
  EXPECT_EQ(threshold_b(odds({5, 9})), OddInt{47});
  EXPECT_EQ(threshold_b(std::vector<OddInt>{}), OddInt{1});
  EXPECT_EQ(threshold_b(odds({5})), OddInt{9});
  EXPECT_EQ(threshold_b(odds({1})), OddInt{1});
}

TEST(ThresholdB, InadmissiblePrefixNamesTheFailingPair) {
  try {
    threshold_b(odds({5, 9, 45}));
    FAIL() << "expected an error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("(i,k)=(1,3)"), std::string::npos) << e.what();
  }
}

TEST(SmallestOddAbove, IntegerAndFractionalBounds) {
  EXPECT_EQ(smallest_odd_above(Fraction{45, 1}), OddInt{47});
  EXPECT_EQ(smallest_odd_above(Fraction{44, 1}), OddInt{45});
  EXPECT_EQ(smallest_odd_above(Fraction{15, 2}), OddInt{9});
  EXPECT_EQ(smallest_odd_above(Fraction{-7, 3}), OddInt{1});
  EXPECT_EQ(smallest_odd_above(Fraction{1, 1}), OddInt{3});
}

TEST(PrefixFamily, Examples) {
  EXPECT_EQ(to_string(prefix_family(odds({3, 5})).family), "(87+16t)/(135+30t)");
  EXPECT_EQ(to_string(prefix_family(odds({5, 9})).family), "(703+28t)/(2115+90t)");
  EXPECT_EQ(to_string(prefix_family(odds({5})).family), "(14+2t)/(45+10t)");
  EXPECT_EQ(to_string(prefix_family(odds({3})).family), "(6+2t)/(9+6t)");
}

TEST(PrefixFamily, EmptyPrefixGivesUnitFractions) {
  const auto r = prefix_family(std::vector<OddInt>{});
  EXPECT_EQ(r.b, OddInt{1});
  EXPECT_EQ(to_string(r.family), "1/(1+2t)");
}

TEST(Fixed1Length2Family, Examples) {
  EXPECT_EQ(to_string(fixed1_length2_family(3)), "(6+2t)/(9+6t)");
  EXPECT_EQ(to_string(fixed1_length2_family(5)), "(14+2t)/(45+10t)");
  EXPECT_EQ(to_string(fixed1_length2_family(1)), "(2+2t)/(1+2t)");
}

TEST(Fixed1Length2Family, AgreesWithThresholdFamily) {
  for (int x = 1; x <= 99; x += 2) {
    const auto prefix = odds({x});
    ASSERT_TRUE(same_coefficients(fixed1_length2_family(x), prefix_family(prefix).family)) << x;
    // b = (x-1)^2/2 + 1
    ASSERT_EQ(threshold_b(prefix).value(), (x - 1) * (x - 1) / 2 + 1);
  }
}

TEST(PrefixFamily, MembersExpandToPrefixPlusShiftedB) {
  testing::for_each_odd_tuple(3, 15, [](const std::vector<OddInt>& prefix) {
    if (!is_greedy_sequence(prefix)) return;
    const auto r = prefix_family(prefix);
    for (int t = 0; t <= 10; ++t) {
      auto expected = prefix;
      expected.emplace_back(r.b.value() + 2 * t);
      const auto e = odd_greedy_expand(family_member(r.family, t));
      ASSERT_TRUE(e.terminated());
      ASSERT_EQ(e.denominators, expected);
    }
  });
}

TEST(PrefixFamily, BIsMinimal) {
  testing::for_each_odd_tuple(3, 15, [](const std::vector<OddInt>& prefix) {
    if (!is_greedy_sequence(prefix)) return;
    const OddInt b = threshold_b(prefix);
    auto xs = prefix;
    xs.push_back(b);
    ASSERT_TRUE(is_greedy_sequence(xs));
    if (b.value() >= 3) {
      xs.back() = OddInt{b.value() - 2};
      ASSERT_FALSE(is_greedy_sequence(xs));
    }
  });
}

TEST(PrefixFamily, CompleteOverScannedLastDenominators) {
  for (const auto& prefix : {odds({3, 5}), odds({5, 9}), odds({3}), odds({7, 25})}) {
    const auto bad = check_prefix_completeness(prefix, 301);
    EXPECT_TRUE(bad.empty()) << bad.front().subject << " " << bad.front().observed;
  }
}

}  // namespace
}  // namespace oddgreedy
