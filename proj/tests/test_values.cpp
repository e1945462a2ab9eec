#include <gtest/gtest.h>

#include "valchain/values.hpp"

using valchain::GroupValue;
using valchain::Rational;

namespace {

GroupValue V(std::initializer_list<Rational> c) { return GroupValue(std::vector<Rational>(c)); }

}  // namespace

TEST(GroupValue, ComponentwiseAddition) {
  EXPECT_EQ(V({Rational(1, 2), 0}) + V({Rational(1, 2), 1}), V({1, 1}));
  EXPECT_EQ((V({1, 1}) + V({1, 1})).str(), "(2, 2)");
}

TEST(GroupValue, LexicographicOrder) {
  EXPECT_LT(V({0, 100}), V({1, -5}));
  EXPECT_LT(V({1, 2}), V({1, 3}));
  EXPECT_LT(GroupValue(Rational(7, 2)), V({4, -1}));
  EXPECT_LT(V({1000, 1000}), GroupValue::infinity());
}

TEST(GroupValue, TrailingZerosAreTrimmed) {
  EXPECT_EQ(V({3, 0, 0}), GroupValue(3));
  EXPECT_EQ(V({3, 0, 0}).rank(), 1u);
  EXPECT_EQ(V({0, 0}).str(), "0");
  EXPECT_TRUE(V({0, 0}).is_zero());
  EXPECT_EQ(V({0, 2}).str(), "(0, 2)");
}

TEST(GroupValue, InfinityAbsorbs) {
  const GroupValue inf = GroupValue::infinity();
  EXPECT_TRUE((inf + GroupValue(5)).is_infinite());
  EXPECT_TRUE(inf.times(3).is_infinite());
  EXPECT_THROW((void)(GroupValue(1) - inf), std::domain_error);
  EXPECT_THROW((void)inf.times(0), std::domain_error);
  EXPECT_THROW((void)-inf, std::domain_error);
  EXPECT_EQ(inf.str(), "inf");
}

TEST(GroupValue, ScalingIsExact) {
  EXPECT_EQ(V({1, 3}).scaled(Rational(1, 3)), V({Rational(1, 3), 1}));
  EXPECT_EQ(GroupValue(Rational(3, 2)).times(-2), GroupValue(-3));
}

TEST(GroupValue, ParseRoundTrip) {
  for (const char* s : {"0", "3/2", "-7", "(1, 7/2)", "(0, 2)", "inf", "(1/3, -1/5, 2)"})
    EXPECT_EQ(GroupValue::parse(s).str(), s) << s;
  EXPECT_EQ(GroupValue::parse("(2, 0)"), GroupValue(2));
  EXPECT_THROW(GroupValue::parse("(1, 2"), std::invalid_argument);
  EXPECT_THROW(GroupValue::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(GroupValue::parse("abc"), std::invalid_argument);
}

TEST(GroupValue, GroupAxiomsOnSamples) {
  std::vector<GroupValue> xs{V({1, -2}), V({Rational(-1, 3)}), V({0, 5, 1}), GroupValue(), V({2, Rational(1, 7)})};
  for (const auto& a : xs)
    for (const auto& b : xs) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ((a + b) - b, a);
      for (const auto& c : xs) {
        EXPECT_EQ((a + b) + c, a + (b + c));
        if (a < b) EXPECT_LT(a + c, b + c);
      }
    }
}
