#include "valchain/keypoly.hpp"

#include "valchain/sampling.hpp"

namespace valchain {

GroupValue epsilon(const InductiveValuation& w, const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("epsilon of a constant polynomial");
  const GroupValue wf = w(f);
  std::optional<GroupValue> best;
  for (int b = 1; b <= f.degree(); ++b) {
    const Poly d = hasse_derivative(f, b);
    if (d.is_zero()) continue;
    GroupValue e = (wf - w(d)).scaled(Rational(1, b));
    if (!best || *best < e) best = std::move(e);
  }
  return *best;  // ∂_deg f is a nonzero constant
}

GroupValue delta_split_oracle(const InductiveValuation& w, const std::vector<Root>& roots) {
  if (roots.empty()) throw std::invalid_argument("split-root oracle needs at least one root");
  std::optional<GroupValue> best;
  for (const auto& r : roots) {
    if (r.multiplicity < 1) throw std::invalid_argument("root multiplicity must be positive");
    GroupValue v = w(Poly::linear(r.value));
    if (!best || *best < v) best = std::move(v);
  }
  return *best;
}

DeltaResult delta(const InductiveValuation& w, const Poly& f, const std::optional<std::vector<Root>>& roots) {
  if (roots) {
    Poly product(Rational(1));
    for (const auto& r : *roots) product = product * Poly::linear(r.value).pow(static_cast<unsigned>(r.multiplicity));
    if (f.is_zero() || !(product * f.leading() == f))
      throw std::invalid_argument("roots do not factor " + f.str());
    return {delta_split_oracle(w, *roots), DeltaMethod::SplitRootExact};
  }
  return {epsilon(w, f), DeltaMethod::EpsilonSurrogate};
}

AbkpVerdict is_abkp(const std::optional<InductiveValuation>& low, const InductiveValuation& w, const Poly& phi) {
  if (!phi.is_monic()) throw std::invalid_argument("ABKP candidate must be monic");
  if (low) {
    if (!is_chain_prefix(*low, w)) throw std::invalid_argument("w_low must be a chain prefix of w");
    if (low->ends_in_stable_limit())
      throw UndecidableAbkp("undecidable by implemented characterizations: w_low is a stable limit");
    if (value_increases(*low, w, phi)) return {AbkpKind::Abkp, low->extended(OrdinaryStep{phi, w(phi)})};
    if (phi.degree() == low->degree()) return {AbkpKind::Abkp, *low};
    return {AbkpKind::NotAbkp, std::nullopt};
  }
  if (phi.degree() == 1) {
    // w_{X-a} is the depth-zero valuation w_{a, w(X-a)}.
    const Rational a = -phi.coeff(0);
    return {AbkpKind::LinearAlways, InductiveValuation(w.field(), Seed{a, w(phi)})};
  }
  if (!w.ends_in_stable_limit() && phi == w.key_polynomial()) return {AbkpKind::Abkp, w};
  throw UndecidableAbkp("undecidable by implemented characterizations: " + phi.str());
}

MultiplicativityReport check_multiplicativity(const InductiveValuation& w, std::size_t sample_count,
                                              int degree_bound, std::uint64_t seed) {
  if (sample_count == 0) throw std::invalid_argument("sample_count must be >= 1");
  std::vector<std::pair<Poly, Poly>> pairs;
  for (int total = 2; total <= 2 * degree_bound; ++total)
    for (int a = 1; a <= total / 2; ++a)
      if (total - a <= degree_bound) pairs.emplace_back(Poly::monomial(1, a), Poly::monomial(1, total - a));
  std::vector<Poly> keys{Poly::linear(w.seed().alpha)};
  for (const auto& s : w.steps()) {
    if (const auto* o = std::get_if<OrdinaryStep>(&s)) keys.push_back(o->phi);
    if (const auto* l = std::get_if<LimitStep>(&s)) {
      keys.push_back(l->family.item(0).chi);
      keys.push_back(l->phi);
    }
  }
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i; j < keys.size(); ++j)
      if (keys[i].degree() + keys[j].degree() <= 2 * degree_bound) pairs.emplace_back(keys[i], keys[j]);

  MultiplicativityReport report;
  PolySampler sampler(w.field(), seed);
  for (std::size_t n = 0; n < sample_count; ++n) {
    Poly f, g;
    if (n < pairs.size()) {
      std::tie(f, g) = pairs[n];
    } else {
      f = sampler.poly(degree_bound);
      g = sampler.poly(degree_bound);
    }
    GroupValue prod = w(f * g);
    GroupValue sum = w(f) + w(g);
    ++report.checked;
    if (!(prod == sum)) report.failures.push_back({std::move(f), std::move(g), std::move(prod), std::move(sum)});
  }
  return report;
}

}  // namespace valchain
