#include "valchain/scenarios.hpp"

#include <stdexcept>

#include "valchain/report.hpp"
#include "valchain/sampling.hpp"

namespace valchain::scenarios {

namespace {

GroupValue pair(long a, Rational b) { return GroupValue(std::vector<Rational>{Rational(a), std::move(b)}); }

ContinuousFamily digit_family(const BaseField& field, FamilyKind kind, std::size_t start, std::size_t window) {
  FamilySpec spec;
  spec.kind = kind;
  spec.start = start;
  spec.window = window;
  if (kind == FamilyKind::HenselDigits) {
    spec.target = Poly::parse("X^2 - 7");
    spec.root = 1;
  } else {
    spec.rule = "squares";
  }
  return ContinuousFamily(field, std::move(spec));
}

MLVChain sqrt7_on(GroupValue delta, std::size_t window) {
  const BaseField field(3, 1);
  return MLVChain(InductiveValuation(
      field, Seed{1, std::move(delta)},
      {LimitStep{digit_family(field, FamilyKind::HenselDigits, 1, window), Poly::parse("X^2 - 7"), pair(1, Rational(7, 2))}}));
}

ABKPSequence two_step_blocks(SequenceShape shape) {
  return ABKPSequence(BaseField(2),
                      {Block{Poly::x(), GroupValue(Rational(1, 2)), std::nullopt},
                       Block{Poly::parse("X^2 - 2"), GroupValue(Rational(3, 2)), std::nullopt}},
                      shape);
}

}  // namespace

MLVChain two_step() {
  return MLVChain(InductiveValuation(BaseField(2), Seed{0, GroupValue(Rational(1, 2))},
                                     {OrdinaryStep{Poly::parse("X^2 - 2"), GroupValue(Rational(3, 2))}}));
}

InductiveValuation gauss3() { return InductiveValuation(BaseField(3), Seed{0, 0}); }

ContinuousFamily sqrt7_gauss_family(std::size_t window) {
  return digit_family(BaseField(3), FamilyKind::HenselDigits, 0, window);
}

ContinuousFamily sqrt7_family(std::size_t window) {
  return digit_family(BaseField(3, 1), FamilyKind::HenselDigits, 1, window);
}

MLVChain sqrt7(std::size_t window) { return sqrt7_on(pair(0, 1), window); }

MLVChain liouville(std::size_t window) {
  const BaseField field(3);
  return MLVChain(InductiveValuation(field, Seed{1, 1},
                                     {StableLimitStep{digit_family(field, FamilyKind::DigitStream, 1, window)}}));
}

MLVChain tower() { return MLVChain(ChainGenerator(BaseField(3), "ramified-tower")); }

MLVChain non_growing_ordinary() {
  return MLVChain(InductiveValuation(BaseField(2), Seed{0, GroupValue(Rational(1, 2))},
                                     {OrdinaryStep{Poly::linear(1), 2}}));
}

ABKPSequence decreasing_gamma() {
  return ABKPSequence(BaseField(2),
                      {Block{Poly::x(), GroupValue(Rational(1, 2)), std::nullopt},
                       Block{Poly::parse("X^2 - 2"), GroupValue(Rational(1, 4)), std::nullopt}},
                      SequenceShape::Finite);
}

ABKPSequence first_degree_two() {
  return ABKPSequence(BaseField(2), {Block{Poly::parse("X^2 - 2"), 1, std::nullopt}}, SequenceShape::Finite);
}

MLVChain increasing_limit_phi() { return sqrt7_on(pair(0, Rational(1, 2)), 8); }

MLVChain non_key_augmentation() {
  return MLVChain(InductiveValuation(BaseField(2), Seed{0, 1},
                                     {OrdinaryStep{Poly::monomial(1, 2), GroupValue(Rational(5, 2))}}));
}

ABKPSequence undetermined_sequence() { return two_step_blocks(SequenceShape::Undetermined); }

namespace {

struct Run {
  DemoOutcome out;

  void line(std::string s) { out.lines.push_back(std::move(s)); }
  void check(const std::string& name, bool ok) {
    out.structured["checks"].push_back({{"name", name}, {"passed", ok}});
    if (!ok) out.failed_checks.push_back(name);
  }
  void validation(const std::string& label, const ValidationReport& report) {
    auto lines = report_lines(report);
    line(label + ": " + lines.front());
    for (std::size_t i = 1; i < lines.size(); ++i) line(lines[i]);
    out.structured[label] = to_json(report);
  }
};

std::string list(const std::vector<GroupValue>& values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : ", ") + v.str();
  return s;
}

bool strictly_increasing(const std::vector<GroupValue>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i - 1] < v[i])) return false;
  return true;
}

bool round_trips(const MLVChain& chain) {
  return abkp_to_mlv_unchecked(mlv_to_abkp_unchecked(chain)) == chain;
}

bool representations_agree(const MLVChain& chain, const DemoOptions& o, int degree) {
  const ABKPSequence seq = mlv_to_abkp_unchecked(chain);
  const InductiveValuation w = chain.prefix(o.depth);
  PolySampler sampler(chain.field(), o.seed);
  for (int n = 0; n < 20; ++n) {
    const Poly f = sampler.poly(degree);
    if (!(w(f) == eval_sequence(seq, f, o.depth))) return false;
  }
  return true;
}

void demo_two_step(Run& r, const DemoOptions& o) {
  const MLVChain chain = two_step();
  const InductiveValuation& w = chain.chain();
  r.line("two-step over Q with v_2");
  r.line("chain: w_{0,1/2} -> [X^2 - 2, 3/2]");
  const std::vector<std::pair<std::string, GroupValue>> expected{
      {"X", GroupValue(Rational(1, 2))}, {"X^2 + 2", GroupValue(Rational(3, 2))}, {"X^3", GroupValue(Rational(3, 2))}};
  bool values_ok = true;
  for (const auto& [text, value] : expected) {
    const GroupValue v = w(Poly::parse(text));
    r.line("w(" + text + ") = " + v.str());
    r.out.structured["values"][text] = v.str();
    values_ok = values_ok && v == value;
  }
  r.check("worked values", values_ok);
  const ValidationReport report = validate_chain(chain, o.depth, {Poly::x(), Poly::linear(-1)}, {40, 6, o.seed});
  r.validation("chain validation", report);
  r.check("chain validates", report.passed());
  const ABKPSequence seq = mlv_to_abkp_unchecked(chain);
  r.line("sequence: (X, 1/2), (X^2 - 2, 3/2)");
  const ValidationReport sreport = validate_sequence(seq, o.depth, {40, 6, o.seed});
  r.validation("sequence validation", sreport);
  r.check("sequence validates", sreport.passed());
  r.check("round trip", round_trips(chain));
  r.check("representations agree", representations_agree(chain, o, 6));
  const Classification c = classify(seq, o.depth);
  r.line("classification: " + c.str());
  r.out.structured["classification"] = c.str();
  r.check("valuation-transcendental", c.kind == ExtensionKind::ValuationTranscendental);
}

void demo_sqrt7(Run& r, const DemoOptions& o) {
  const MLVChain chain = sqrt7(o.window);
  const InductiveValuation base = chain.chain().prefix(0);
  const ContinuousFamily family = sqrt7_family(o.window);
  r.line("sqrt7 over Q with v_3 in the second coordinate");
  r.line("family W over w_{1,(0,1)}: X - a_i, a_i -> sqrt(7) in Z_3");
  std::string as;
  for (std::size_t i = 0; i < std::min<std::size_t>(o.depth, 4); ++i) as += to_string(family.approximant(i)) + ", ";
  r.line("a_i: " + as + "...");

  const Poly phi = Poly::parse("X^2 - 7");
  const StableValue sv = family_stable_value(base, family, phi);
  std::vector<GroupValue> shown(sv.observed.begin(), sv.observed.begin() + std::min(o.depth, sv.observed.size()));
  r.line("rho_i(X^2 - 7): " + list(shown) + (sv.observed.size() > shown.size() ? ", ..." : ""));
  r.line("X^2 - 7 is " + to_string(sv.status) + " under W");
  r.check("X^2 - 7 unstable", sv.status == Stability::Unstable && strictly_increasing(sv.observed));

  bool linear_stable = true;
  for (const char* text : {"X", "X - 1", "X - 2", "X - 4"}) {
    const StableValue lin = family_stable_value(base, family, Poly::parse(text));
    linear_stable = linear_stable && lin.stable();
  }
  r.check("degree-one probes stable", linear_stable);
  const int m_inf = linear_stable && !sv.stable() ? 2 : 1;
  r.line("unstable at degree " + std::to_string(m_inf) + "; limit key polynomial X^2 - 7");
  r.out.structured["unstable_degree"] = m_inf;
  r.out.structured["limit_key_polynomial"] = phi.str();

  const InductiveValuation& w = chain.chain();
  const GroupValue wphi = w(phi);
  r.line("limit augmentation [W; X^2 - 7, (1, 7/2)]: w(X^2 - 7) = " + wphi.str());
  r.check("anchor value", wphi == pair(1, Rational(7, 2)));
  const ValidationReport report = validate_chain(chain, o.depth, {}, {40, 6, o.seed});
  r.validation("chain validation", report);
  r.check("chain validates", report.passed());
  const ABKPSequence seq = mlv_to_abkp_unchecked(chain);
  const ValidationReport sreport = validate_sequence(seq, o.depth, {40, 6, o.seed});
  r.validation("sequence validation", sreport);
  r.check("sequence validates", sreport.passed());
  r.check("round trip", round_trips(chain));
  r.check("representations agree", representations_agree(chain, o, 6));
  const Classification c = classify(seq, o.depth);
  r.line("classification: " + c.str() + " after limit augmentation");
  r.out.structured["classification"] = c.str();
  r.check("valuation-transcendental", c.kind == ExtensionKind::ValuationTranscendental);
}

void demo_liouville(Run& r, const DemoOptions& o) {
  const MLVChain chain = liouville(o.window);
  const InductiveValuation base = chain.chain().prefix(0);
  const auto& family = std::get<StableLimitStep>(chain.chain().steps().back()).family;
  r.line("liouville over Q with v_3: stable limit of X - a_i, a_i -> sum 3^(k^2)");
  PolySampler sampler(chain.field(), o.seed);
  std::size_t exact = 0, heuristic = 0, other = 0;
  for (int n = 0; n < 20; ++n) {
    const StableValue sv = family_stable_value(base, family, sampler.poly(1, 3));
    (sv.status == Stability::Exact ? exact : sv.status == Stability::Heuristic ? heuristic : other)++;
  }
  r.line("20 sampled polynomials of degree <= 3: " + std::to_string(exact) + " exact, " + std::to_string(heuristic) +
         " heuristic, " + std::to_string(other) + " not stable");
  r.out.structured["stable_samples"] = {{"exact", exact}, {"heuristic", heuristic}, {"not_stable", other}};
  r.check("samples stabilize", other == 0);
  const ValidationReport report = validate_chain(chain, o.depth, {}, {40, 6, o.seed});
  r.validation("chain validation", report);
  r.check("chain validates", report.passed());
  const ABKPSequence seq = mlv_to_abkp_unchecked(chain);
  const ValidationReport sreport = validate_sequence(seq, o.depth, {40, 6, o.seed});
  r.validation("sequence validation", sreport);
  r.check("sequence validates", sreport.passed());
  r.check("round trip", round_trips(chain));
  r.check("representations agree", representations_agree(chain, o, 6));
  const Classification c = classify(seq, o.depth);
  r.line("classification: " + c.str());
  r.out.structured["classification"] = c.str();
  r.check("valuation-algebraic", c.kind == ExtensionKind::ValuationAlgebraic);
}

void demo_tower(Run& r, const DemoOptions& o) {
  const MLVChain chain = tower();
  const InductiveValuation w = chain.prefix(o.depth);
  r.line("tower over Q with v_3: infinite chain of ramified ordinary augmentations");
  const auto& gen = *chain.generator();
  r.line("step 0: X, gamma = " + gen.seed().delta.str());
  for (std::size_t n = 0; n < w.depth(); ++n) {
    const auto& s = std::get<OrdinaryStep>(w.steps()[n]);
    r.line("step " + std::to_string(n + 1) + ": deg " + std::to_string(s.phi.degree()) + ", gamma = " + s.gamma.str());
  }
  const ValidationReport report = validate_chain(chain, o.depth, {}, {40, 6, o.seed});
  r.validation("chain validation", report);
  r.check("chain validates", report.passed());

  // Every sampled f stabilizes once deg f < deg φ_n.
  PolySampler sampler(chain.field(), o.seed);
  bool stable = true;
  for (int k = 0; k < 20; ++k) {
    const Poly f = sampler.poly(1, 6);
    std::size_t n = 0;
    while (n < w.depth() && w.prefix(n).degree() <= f.degree()) ++n;
    const GroupValue v = w.prefix(n)(f);
    for (std::size_t m = n + 1; m <= w.depth(); ++m) stable = stable && w.prefix(m)(f) == v;
  }
  r.check("sampled values stabilize along the chain", stable);
  const ABKPSequence seq = mlv_to_abkp_unchecked(chain);
  r.check("round trip", round_trips(chain));
  const Classification c = classify(seq, o.depth);
  r.line("classification: " + c.str());
  r.out.structured["classification"] = c.str();
  r.check("valuation-algebraic", c.kind == ExtensionKind::ValuationAlgebraic);
}

}  // namespace

std::vector<std::string> demo_names() { return {"two-step", "sqrt7", "liouville", "tower"}; }

DemoOutcome run_demo(const std::string& name, const DemoOptions& options) {
  Run r;
  r.out.name = name;
  r.out.structured = Json{{"scenario", name}, {"depth", options.depth}, {"window", options.window}, {"checks", Json::array()}};
  if (name == "two-step") demo_two_step(r, options);
  else if (name == "sqrt7") demo_sqrt7(r, options);
  else if (name == "liouville") demo_liouville(r, options);
  else if (name == "tower") demo_tower(r, options);
  else throw std::invalid_argument("unknown demo '" + name + "'");
  r.out.structured["status"] = r.out.passed() ? "pass" : "fail";
  return r.out;
}

}  // namespace valchain::scenarios
