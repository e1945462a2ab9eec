#include <gtest/gtest.h>

#include "valchain/generators.hpp"
#include "valchain/keypoly.hpp"
#include "valchain/sampling.hpp"
#include "valchain/scenarios.hpp"

using namespace valchain;

namespace {

Poly P(const char* s) { return Poly::parse(s); }
InductiveValuation dz(long p, Rational a, Rational d) { return InductiveValuation(BaseField(p), Seed{a, GroupValue(d)}); }

}  // namespace

TEST(Epsilon, Worked) {
  EXPECT_EQ(epsilon(dz(3, 0, 1), P("X^2")), GroupValue(1));
  EXPECT_EQ(epsilon(dz(3, 0, 1), P("X - 5")), dz(3, 0, 1)(P("X - 5")));
  const auto rho2 = family_member(scenarios::gauss3(), scenarios::sqrt7_gauss_family(), 2);
  EXPECT_EQ(epsilon(rho2, P("X^2 - 7")), GroupValue(4));
  EXPECT_THROW(epsilon(dz(3, 0, 1), P("5")), std::invalid_argument);
}

TEST(Delta, SplitOracleWorked) {
  EXPECT_EQ(delta_split_oracle(dz(2, 0, 1), {{2, 1}, {8, 1}}), GroupValue(1));
  EXPECT_EQ(delta_split_oracle(dz(2, 0, 3), {{2, 1}, {4, 1}}), GroupValue(2));
  EXPECT_THROW(delta_split_oracle(dz(2, 0, 1), {}), std::invalid_argument);
  const auto exact = delta(dz(2, 0, 3), P("X^2 - 6*X + 8"), std::vector<Root>{{2, 1}, {4, 1}});
  EXPECT_EQ(exact.method, DeltaMethod::SplitRootExact);
  EXPECT_THROW(delta(dz(2, 0, 3), P("X^2 - 6*X + 9"), std::vector<Root>{{2, 1}, {4, 1}}), std::invalid_argument);
  EXPECT_EQ(delta(dz(2, 0, 3), P("X^2 + 1")).method, DeltaMethod::EpsilonSurrogate);
}

// ε agrees with δ on split polynomials; δ is computed from the roots.
TEST(Epsilon, AgreesWithSplitRootDelta) {
  for (long p : {3L, 5L}) {
    PolySampler s(BaseField(p), static_cast<std::uint64_t>(p));
    for (int n = 0; n < 60; ++n) {
      const InductiveValuation w = random_chain(static_cast<std::uint64_t>(n + 1), {{p}, 2, 4});
      std::vector<Root> roots;
      Poly f(Rational(1));
      const int deg = s.uniform(1, 4);
      for (int k = 0; k < deg; ++k) {
        const Rational r = s.coefficient();
        roots.push_back({r, 1});
        f = f * Poly::linear(r);
      }
      EXPECT_EQ(epsilon(w, f), delta_split_oracle(w, roots)) << "f = " << f;
    }
  }
}

TEST(IsAbkp, Templates) {
  const auto w1 = scenarios::two_step().chain();
  const auto top = is_abkp(std::nullopt, w1, P("X^2 - 2"));
  EXPECT_EQ(top.kind, AbkpKind::Abkp);
  EXPECT_EQ(top.truncation, w1);
  const auto low = is_abkp(w1.prefix(0), w1, P("X"));
  EXPECT_EQ(low.kind, AbkpKind::Abkp);
  EXPECT_EQ(low.truncation, w1.prefix(0));
  const auto lin = is_abkp(std::nullopt, w1, P("X - 3"));
  EXPECT_EQ(lin.kind, AbkpKind::LinearAlways);
  EXPECT_EQ(lin.truncation->seed().delta, w1(P("X - 3")));
  EXPECT_EQ(is_abkp(w1.prefix(0), w1, P("X^3 - 2")).kind, AbkpKind::NotAbkp);
  EXPECT_THROW(is_abkp(std::nullopt, w1, P("X^3 + X + 1")), UndecidableAbkp);
  EXPECT_THROW(is_abkp(std::nullopt, w1, P("2*X")), std::invalid_argument);
}

TEST(Multiplicativity, WorkedPassAndWitness) {
  EXPECT_TRUE(check_multiplicativity(scenarios::two_step().chain(), 200, 6, 1).passed());
  const auto bad = check_multiplicativity(scenarios::non_key_augmentation().chain(), 40, 6, 1);
  ASSERT_FALSE(bad.passed());
  EXPECT_EQ(bad.failures[0].f, P("X"));
  EXPECT_EQ(bad.failures[0].g, P("X"));
  EXPECT_EQ(bad.failures[0].value_of_product.str(), "5/2");
  EXPECT_EQ(bad.failures[0].sum_of_values.str(), "2");
  EXPECT_THROW(check_multiplicativity(scenarios::two_step().chain(), 0, 6, 1), std::invalid_argument);
}
