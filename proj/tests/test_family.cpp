#include <gtest/gtest.h>

#include "oracles.hpp"
#include "valchain/scenarios.hpp"

using namespace valchain;

TEST(HenselDigits, MatchOracleLifting) {
  const auto digits = hensel_digits(BaseField(3), Poly::parse("X^2 - 7"), 1, 60);
  EXPECT_EQ(digits, oracle::sqrt7_digits(60));
  EXPECT_THROW(hensel_digits(BaseField(3), Poly::parse("X^2 - 7"), 0, 4), std::invalid_argument);
  // 1 is a double root of (X - 1)^2 mod 3
  EXPECT_THROW(hensel_digits(BaseField(3), Poly::parse("X^2 - 2*X + 4"), 1, 4), std::invalid_argument);
}

TEST(Family, SqrtSevenItemsMatchOracle) {
  const auto fam = scenarios::sqrt7_gauss_family();
  const auto ref = oracle::cut_digits(oracle::sqrt7_digits(200), 3, 12);
  for (std::size_t i = 0; i < 12; ++i) {
    EXPECT_EQ(fam.approximant(i), ref.a[i]) << i;
    EXPECT_EQ(fam.item(i).chi, Poly::linear(ref.a[i]));
    EXPECT_EQ(fam.item(i).gamma, GroupValue(ref.gamma[i]));
  }
  EXPECT_EQ(fam.degree(), 1);
  EXPECT_FALSE(fam.size().has_value());
}

TEST(Family, StartShiftsAndOffsetEmbeds) {
  const auto shifted = scenarios::sqrt7_family();
  const auto gauss = scenarios::sqrt7_gauss_family();
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(shifted.item(i).chi, gauss.item(i + 1).chi);
    EXPECT_EQ(shifted.item(i).gamma, GroupValue(std::vector<Rational>{0, gauss.item(i + 1).gamma.coord(0)}));
  }
}

TEST(Family, DigitStreams) {
  FamilySpec spec;
  spec.kind = FamilyKind::DigitStream;
  spec.rule = "squares";
  const ContinuousFamily fam(BaseField(3), spec);
  // nonzero digits at 0, 1, 4, 9, 16
  EXPECT_EQ(fam.approximant(0), 1);
  EXPECT_EQ(fam.approximant(1), 4);
  EXPECT_EQ(fam.approximant(2), 85);
  EXPECT_EQ(fam.item(2).gamma, GroupValue(9));
  spec.rule = "triangular";  // 0, 1, 3, 6, 10
  const ContinuousFamily tri(BaseField(2), spec);
  EXPECT_EQ(tri.item(1).gamma, GroupValue(3));
  EXPECT_EQ(tri.approximant(2), 1 + 2 + 8);
  spec.rule = "nope";
  EXPECT_THROW(ContinuousFamily(BaseField(2), spec).item(0), std::invalid_argument);
}

TEST(Family, ExplicitList) {
  FamilySpec spec;
  spec.items = {{Poly::parse("X - 1"), 1}, {Poly::parse("X - 4"), 2}};
  const ContinuousFamily fam(BaseField(3), spec);
  EXPECT_EQ(fam.size(), 2u);
  EXPECT_THROW(fam.item(2), std::out_of_range);
  EXPECT_THROW(fam.approximant(0), std::logic_error);
  spec.items.clear();
  EXPECT_THROW(ContinuousFamily(BaseField(3), spec), std::invalid_argument);
  spec.items = {{Poly::parse("2*X - 1"), 1}};
  EXPECT_THROW(ContinuousFamily(BaseField(3), spec), std::invalid_argument);
}

TEST(Family, WindowAndEquality) {
  const auto a = scenarios::sqrt7_gauss_family(8);
  EXPECT_EQ(a, scenarios::sqrt7_gauss_family(8));
  EXPECT_FALSE(a == a.with_window(5));
  EXPECT_EQ(a.with_window(5).window(), 5u);
  FamilySpec spec = a.spec();
  spec.window = 1;
  EXPECT_THROW(ContinuousFamily(BaseField(3), spec), std::invalid_argument);
}
