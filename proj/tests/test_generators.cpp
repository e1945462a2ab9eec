#include <gtest/gtest.h>

#include "valchain/generators.hpp"
#include "valchain/keypoly.hpp"

using namespace valchain;

TEST(RamifiedTower, HandComputedKeys) {
  RamifiedTower t(BaseField(3), 0, Rational(1, 2));
  t.push(Rational(5, 4), 1);
  t.push(Rational(21, 8), 1);
  t.push(Rational(43, 8), 1, std::nullopt);
  EXPECT_EQ(t.key_polynomials()[1].str(), "X^2 - 3");
  EXPECT_EQ(t.key_polynomials()[2], (Poly::parse("X^2 - 3")).pow(2) - Poly::parse("9*X"));
  EXPECT_EQ(t.key_polynomials()[3], t.key_polynomials()[2].pow(2) - Poly(Rational(81)) * t.key_polynomials()[1]);
  EXPECT_THROW(t.push(Rational(100), 1), std::invalid_argument);  // 43/8 adds no ramification
}

TEST(RamifiedTower, RejectsBadInput) {
  RamifiedTower t(BaseField(3), 0, 1);
  EXPECT_THROW(t.push(3, 1), std::invalid_argument);  // δ = 1 is unramified
  RamifiedTower u(BaseField(3), 0, Rational(1, 2));
  EXPECT_THROW(u.push(Rational(1, 2), 1), std::invalid_argument);  // not above 2 * 1/2
  EXPECT_THROW(u.push(Rational(5, 4), 3), std::invalid_argument);  // 3 is not a unit
  EXPECT_THROW(RamifiedTower(BaseField(3, 1), 0, 1), std::invalid_argument);
}

TEST(ChainGenerator, DoublingTower) {
  const ChainGenerator g(BaseField(3), "ramified-tower");
  const auto w = g.prefix(5);
  ASSERT_EQ(w.depth(), 5u);
  for (std::size_t n = 0; n < 5; ++n) {
    const auto& s = std::get<OrdinaryStep>(w.steps()[n]);
    EXPECT_EQ(s.phi.degree(), 1 << (n + 1));
  }
  EXPECT_EQ(g.prefix(3), w.prefix(3));
  EXPECT_THROW(ChainGenerator(BaseField(3), "spiral"), std::invalid_argument);
}

TEST(RandomChain, DeterministicAndBounded) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto w = random_chain(seed);
    EXPECT_EQ(w, random_chain(seed));
    EXPECT_LE(w.depth(), 3u);
    EXPECT_LE(w.degree(), 8);
    for (std::size_t n = 0; n < w.depth(); ++n) {
      const auto low = w.prefix(n), high = w.prefix(n + 1);
      EXPECT_LT(low.key_value(), high.key_value());
      EXPECT_GT(high.degree(), low.degree());
      EXPECT_TRUE(value_increases(low, high, high.key_polynomial()));
    }
    EXPECT_TRUE(check_multiplicativity(w, 60, 6, seed).passed()) << "seed " << seed;
  }
}
