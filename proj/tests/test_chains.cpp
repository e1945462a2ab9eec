#include <gtest/gtest.h>

#include "valchain/chains.hpp"
#include "valchain/keypoly.hpp"
#include "valchain/sampling.hpp"
#include "valchain/scenarios.hpp"

using namespace valchain;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

std::string axioms(const ValidationReport& r) {
  std::string out;
  for (const auto& f : r.findings) out += f.axiom + " @ " + f.location + ": " + f.detail + "\n";
  return out;
}

}  // namespace

TEST(ValidateChain, ValidScenariosPass) {
  for (const auto& c : {scenarios::two_step(), scenarios::sqrt7(), scenarios::liouville(), scenarios::tower()}) {
    const auto r = validate_chain(c, 6);
    EXPECT_TRUE(r.passed()) << axioms(r);
  }
}

TEST(ValidateChain, CraftedInputsCarryTheRightFinding) {
  EXPECT_TRUE(validate_chain(scenarios::non_growing_ordinary(), 8).has("ordinary-degree-growth"));
  EXPECT_TRUE(validate_chain(scenarios::increasing_limit_phi(), 8).has("limit-phi-not-increasing"));
  const auto nk = validate_chain(scenarios::non_key_augmentation(), 8);
  ASSERT_TRUE(nk.has("multiplicativity")) << axioms(nk);
  bool witness = false;
  for (const auto& f : nk.findings)
    if (f.axiom == "multiplicativity" && f.detail.find("witness (X, X)") != std::string::npos) witness = true;
  EXPECT_TRUE(witness) << axioms(nk);
}

TEST(ValidateChain, DecreasingGamma) {
  const InductiveValuation w(BaseField(2), Seed{0, GroupValue(Rational(1, 2))},
                             {OrdinaryStep{P("X^2 - 2"), GroupValue(Rational(1, 2))}});
  EXPECT_TRUE(validate_chain(MLVChain(w), 8).has("gamma-increasing"));
}

TEST(ValidateSequence, CraftedInputs) {
  const auto g = validate_sequence(scenarios::decreasing_gamma(), 8);
  ASSERT_TRUE(g.has("gamma-increasing"));
  EXPECT_EQ(g.findings[0].location, "block 1");
  EXPECT_TRUE(validate_sequence(scenarios::first_degree_two(), 8).has("first-degree-one"));
  EXPECT_TRUE(validate_sequence(mlv_to_abkp_unchecked(scenarios::two_step()), 8).passed());
  EXPECT_TRUE(validate_sequence(mlv_to_abkp_unchecked(scenarios::sqrt7()), 8).passed());
  EXPECT_TRUE(validate_sequence(mlv_to_abkp_unchecked(scenarios::liouville()), 8).passed());
}

TEST(ValidateSequence, NonMonicAndEmpty) {
  const BaseField f(2);
  const ABKPSequence nonmonic(f, {Block{P("2*X"), GroupValue(1), {}}}, SequenceShape::Finite);
  EXPECT_TRUE(validate_sequence(nonmonic, 8).has("monic"));
  EXPECT_THROW(ABKPSequence(f, {}, SequenceShape::Finite), std::invalid_argument);
}

TEST(Converters, RoundTripsReproduceData) {
  for (const auto& c : {scenarios::two_step(), scenarios::sqrt7(), scenarios::liouville(), scenarios::tower()}) {
    const ABKPSequence s = mlv_to_abkp(c, 8);
    EXPECT_EQ(abkp_to_mlv(s, 8), c);
    EXPECT_EQ(mlv_to_abkp(abkp_to_mlv(s, 8), 8), s);
  }
}

TEST(Converters, InvalidInputsRaise) {
  try {
    abkp_to_mlv(scenarios::decreasing_gamma(), 8);
    FAIL() << "expected ConversionError";
  } catch (const ConversionError& e) {
    EXPECT_TRUE(e.report().has("gamma-increasing"));
  }
  EXPECT_THROW(mlv_to_abkp(scenarios::non_growing_ordinary(), 8), ConversionError);
}

TEST(Converters, EvaluationsAgree) {
  for (const auto& c : {scenarios::two_step(), scenarios::sqrt7(), scenarios::liouville()}) {
    const ABKPSequence s = mlv_to_abkp_unchecked(c);
    const InductiveValuation w = c.prefix(8);
    PolySampler sampler(c.field(), 7);
    for (int k = 0; k < 50; ++k) {
      const Poly f = sampler.poly(6);
      EXPECT_EQ(eval_sequence(s, f, 8), w(f)) << "f = " << f;
    }
  }
}

TEST(Converters, SqrtSevenTail) {
  const ABKPSequence s = mlv_to_abkp_unchecked(scenarios::sqrt7());
  EXPECT_EQ(s.shape(), SequenceShape::Finite);
  ASSERT_EQ(s.blocks().size(), 2u);
  ASSERT_TRUE(s.blocks()[0].tail.has_value());
  EXPECT_EQ(s.blocks()[0].tail->item(0).chi, P("X - 4"));
  EXPECT_EQ(s.blocks()[1].head, P("X^2 - 7"));
}

TEST(Classify, SixScenarios) {
  const auto seq = [](const MLVChain& c) { return mlv_to_abkp_unchecked(c); };
  EXPECT_EQ(classify(seq(scenarios::two_step()), 8).kind, ExtensionKind::ValuationTranscendental);
  EXPECT_EQ(classify(seq(MLVChain(scenarios::gauss3())), 8).kind, ExtensionKind::ValuationTranscendental);
  EXPECT_EQ(classify(seq(scenarios::sqrt7()), 8).kind, ExtensionKind::ValuationTranscendental);
  EXPECT_EQ(classify(seq(scenarios::liouville()), 8).kind, ExtensionKind::ValuationAlgebraic);
  EXPECT_EQ(classify(seq(scenarios::tower()), 8).kind, ExtensionKind::ValuationAlgebraic);
  const auto u = classify(scenarios::undetermined_sequence(), 5);
  EXPECT_EQ(u.kind, ExtensionKind::Undetermined);
  EXPECT_EQ(u.str(), "undetermined at depth 5");
}

TEST(FamilyIdentities, SqrtSevenUpToEight) {
  const auto base = scenarios::gauss3();
  const auto fam = scenarios::sqrt7_gauss_family();
  EXPECT_TRUE(check_family(base, fam, 9).empty());
  for (std::size_t j = 1; j <= 8; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const auto rho = family_member(base, fam, i);
      const GroupValue gi = fam.item(i).gamma, gj = fam.item(j).gamma;
      EXPECT_EQ(rho(fam.item(j).chi), gi < gj ? gi : gj) << i << " " << j;
      EXPECT_FALSE(equivalent(rho, fam.item(j).chi, fam.item(i).chi)) << i << " " << j;
    }
}
