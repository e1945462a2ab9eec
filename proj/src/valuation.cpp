#include "valchain/valuation.hpp"

#include <algorithm>

namespace valchain {

namespace {

// A chain restricted to its first `depth` steps, without copying.
struct View {
  const InductiveValuation* w;
  std::size_t depth;
};

GroupValue eval_at(View v, const Poly& f);
StableValue stable_at(View base, const ContinuousFamily& family, const Poly& f);

template <typename CoeffValue>
GroupValue augmented(const Poly& phi, const GroupValue& gamma, const Poly& f, CoeffValue&& coeff_value) {
  auto parts = phi_expansion(f, phi);
  GroupValue best = GroupValue::infinity();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_zero()) continue;
    best = min(best, coeff_value(parts[i]) + gamma.times(static_cast<long>(i)));
  }
  return best;
}

GroupValue member_at(View base, const FamilyItem& item, const Poly& f) {
  return augmented(item.chi, item.gamma, f, [&](const Poly& c) { return eval_at(base, c); });
}

GroupValue require_stable(View base, const ContinuousFamily& family, const Poly& f) {
  StableValue sv = stable_at(base, family, f);
  if (sv.stable()) return sv.value;
  throw UnresolvedStability("value of " + f.str() + " is " + to_string(sv.status) + " under the family", sv.observed);
}

GroupValue eval_at(View v, const Poly& f) {
  if (f.is_zero()) return GroupValue::infinity();
  if (v.depth == 0) {
    const Seed& s = v.w->seed();
    return eval_depth_zero(v.w->field(), s.alpha, s.delta, f);
  }
  const Step& step = v.w->steps()[v.depth - 1];
  const View prev{v.w, v.depth - 1};
  if (const auto* o = std::get_if<OrdinaryStep>(&step))
    return augmented(o->phi, o->gamma, f, [&](const Poly& c) { return eval_at(prev, c); });
  if (const auto* l = std::get_if<LimitStep>(&step))
    return augmented(l->phi, l->gamma, f, [&](const Poly& c) { return require_stable(prev, l->family, c); });
  return require_stable(prev, std::get<StableLimitStep>(step).family, f);
}

StableValue stable_at(View base, const ContinuousFamily& family, const Poly& f) {
  StableValue out;
  if (f.is_zero()) {
    out.status = Stability::Exact;
    out.value = GroupValue::infinity();
    return out;
  }
  const std::size_t window = family.window();
  std::size_t limit = 4 * window;
  if (auto n = family.size()) limit = std::min(limit, *n);
  std::size_t run = 0;
  bool increasing = true;
  for (std::size_t i = 0; i < limit; ++i) {
    const FamilyItem item = family.item(i);
    auto parts = phi_expansion(f, item.chi);
    GroupValue best = GroupValue::infinity();
    GroupValue head = GroupValue::infinity();
    GroupValue rest = GroupValue::infinity();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (parts[k].is_zero()) continue;
      GroupValue t = eval_at(base, parts[k]) + item.gamma.times(static_cast<long>(k));
      if (k == 0) head = t;
      else rest = min(rest, t);
      best = min(best, t);
    }
    out.observed.push_back(best);
    if (!parts[0].is_zero() && head < rest) {
      out.status = Stability::Exact;
      out.value = best;
      // Earlier members may already share the value.
      std::size_t from = i;
      while (from > 0 && out.observed[from - 1] == best) --from;
      out.from_index = from;
      return out;
    }
    if (i > 0) {
      const auto& prev = out.observed[i - 1];
      if (best == prev) {
        ++run;
      } else {
        run = 1;
      }
      if (!(prev < best)) increasing = false;
    } else {
      run = 1;
    }
    if (run >= window) {
      out.status = Stability::Heuristic;
      out.value = best;
      out.from_index = i + 1 - window;
      return out;
    }
  }
  out.status = increasing && limit == 4 * window ? Stability::Unstable : Stability::Unresolved;
  return out;
}

}  // namespace

std::string step_type_name(const Step& step) {
  switch (step.index()) {
    case 0: return "ordinary";
    case 1: return "limit";
    default: return "stable_limit";
  }
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Exact: return "stable";
    case Stability::Heuristic: return "stable (heuristic)";
    case Stability::Unstable: return "unstable";
    case Stability::Unresolved: return "unresolved";
  }
  return "?";
}

InductiveValuation::InductiveValuation(BaseField field, Seed seed, std::vector<Step> steps)
    : field_(field), seed_(std::move(seed)), steps_(std::move(steps)) {
  if (seed_.delta.is_infinite()) throw std::invalid_argument("depth-zero delta must be finite");
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const Step& s = steps_[k];
    auto check_phi = [&](const Poly& phi) {
      if (!phi.is_monic() || phi.degree() < 1)
        throw std::invalid_argument("step " + std::to_string(k + 1) + ": key polynomial must be monic, got " + phi.str());
    };
    auto check_family = [&](const ContinuousFamily& fam) {
      if (!(fam.field() == field_))
        throw std::invalid_argument("step " + std::to_string(k + 1) + ": family over a different base field");
    };
    if (const auto* o = std::get_if<OrdinaryStep>(&s)) {
      check_phi(o->phi);
      if (o->gamma.is_infinite()) throw std::invalid_argument("augmentation value must be finite");
    } else if (const auto* l = std::get_if<LimitStep>(&s)) {
      check_phi(l->phi);
      check_family(l->family);
      if (l->gamma.is_infinite()) throw std::invalid_argument("augmentation value must be finite");
    } else {
      check_family(std::get<StableLimitStep>(s).family);
      if (k + 1 != steps_.size()) throw std::invalid_argument("a stable-limit step must be the last step");
    }
  }
}

InductiveValuation InductiveValuation::prefix(std::size_t k) const {
  if (k > steps_.size()) throw std::out_of_range("prefix deeper than the chain");
  return InductiveValuation(field_, seed_, std::vector<Step>(steps_.begin(), steps_.begin() + static_cast<long>(k)));
}

InductiveValuation InductiveValuation::extended(Step step) const {
  if (ends_in_stable_limit()) throw std::logic_error("cannot augment past a stable limit");
  auto steps = steps_;
  steps.push_back(std::move(step));
  return InductiveValuation(field_, seed_, std::move(steps));
}

bool InductiveValuation::ends_in_stable_limit() const {
  return !steps_.empty() && std::holds_alternative<StableLimitStep>(steps_.back());
}

Poly InductiveValuation::key_polynomial() const {
  if (steps_.empty()) return Poly::linear(seed_.alpha);
  if (const auto* o = std::get_if<OrdinaryStep>(&steps_.back())) return o->phi;
  if (const auto* l = std::get_if<LimitStep>(&steps_.back())) return l->phi;
  throw std::logic_error("a stable limit has no last key polynomial");
}

GroupValue InductiveValuation::key_value() const {
  if (steps_.empty()) return seed_.delta;
  if (const auto* o = std::get_if<OrdinaryStep>(&steps_.back())) return o->gamma;
  if (const auto* l = std::get_if<LimitStep>(&steps_.back())) return l->gamma;
  throw std::logic_error("a stable limit has no last key value");
}

std::size_t InductiveValuation::value_rank() const {
  std::size_t r = std::max(field_.offset() + 1, seed_.delta.rank());
  auto family_rank = [&](const ContinuousFamily& fam) {
    std::size_t n = 4 * fam.window() + 1;
    if (auto sz = fam.size()) n = std::min(n, *sz);
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, fam.item(i).gamma.rank());
  };
  for (const auto& s : steps_) {
    if (const auto* o = std::get_if<OrdinaryStep>(&s)) {
      r = std::max(r, o->gamma.rank());
    } else if (const auto* l = std::get_if<LimitStep>(&s)) {
      r = std::max(r, l->gamma.rank());
      family_rank(l->family);
    } else {
      family_rank(std::get<StableLimitStep>(s).family);
    }
  }
  return r;
}

GroupValue InductiveValuation::operator()(const Poly& f) const { return eval_at({this, steps_.size()}, f); }

GroupValue eval_depth_zero(const BaseField& field, const Rational& alpha, const GroupValue& delta, const Poly& f) {
  if (delta.is_infinite()) throw std::invalid_argument("depth-zero delta must be finite");
  if (f.is_zero()) return GroupValue::infinity();
  auto c = f.taylor(alpha);
  GroupValue best = GroupValue::infinity();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    best = min(best, field.valuation(c[i]) + delta.times(static_cast<long>(i)));
  }
  return best;
}

GroupValue eval_chain(const InductiveValuation& w, const Poly& f) { return w(f); }

GroupValue truncate(const InductiveValuation& w, const Poly& q, const Poly& f) {
  if (!q.is_monic() || q.degree() < 1) throw std::invalid_argument("truncation polynomial must be monic of degree >= 1");
  return augmented(q, w(q), f, [&](const Poly& c) { return w(c); });
}

bool equivalent(const InductiveValuation& w, const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("equivalence is defined for nonzero polynomials");
  const GroupValue wf = w(f);
  return wf == w(g) && wf < w(f - g);
}

bool divides_w(const InductiveValuation& w, const Poly& phi, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("w-divisibility of the zero polynomial");
  if (!phi.is_monic() || phi.degree() < 1) throw std::invalid_argument("divisor must be monic of degree >= 1");
  const GroupValue wphi = w(phi);
  const GroupValue wf = w(f);
  const std::size_t iota = std::max({w.value_rank(), wphi.rank(), wf.rank()});
  const GroupValue gamma = wphi + GroupValue::unit(iota);
  const GroupValue raised = augmented(phi, gamma, f, [&](const Poly& c) { return w(c); });
  return wf < raised;
}

bool is_chain_prefix(const InductiveValuation& low, const InductiveValuation& high) {
  if (!(low.field() == high.field()) || !(low.seed() == high.seed()) || low.depth() > high.depth()) return false;
  return std::equal(low.steps().begin(), low.steps().end(), high.steps().begin());
}

bool value_increases(const InductiveValuation& low, const InductiveValuation& high, const Poly& g) {
  if (!is_chain_prefix(low, high)) throw std::invalid_argument("value comparison needs chains related by prefix");
  return low(g) < high(g);
}

std::optional<int> phi_degree(const InductiveValuation& low, const InductiveValuation& high,
                              const std::vector<Poly>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("empty candidate list");
  std::optional<int> best;
  for (const auto& g : candidates) {
    if (!g.is_monic()) throw std::invalid_argument("candidate not monic: " + g.str());
    if (best && g.degree() >= *best) continue;
    if (value_increases(low, high, g)) best = g.degree();
  }
  return best;
}

GroupValue family_member_value(const InductiveValuation& base, const ContinuousFamily& family, std::size_t i,
                               const Poly& f) {
  if (f.is_zero()) return GroupValue::infinity();
  return member_at({&base, base.depth()}, family.item(i), f);
}

InductiveValuation family_member(const InductiveValuation& base, const ContinuousFamily& family, std::size_t i) {
  FamilyItem it = family.item(i);
  return base.extended(OrdinaryStep{std::move(it.chi), std::move(it.gamma)});
}

StableValue family_stable_value(const InductiveValuation& base, const ContinuousFamily& family, const Poly& f) {
  return stable_at({&base, base.depth()}, family, f);
}

std::vector<FamilyFinding> check_family(const InductiveValuation& base, const ContinuousFamily& family,
                                        std::size_t depth) {
  std::vector<FamilyFinding> out;
  if (auto n = family.size()) depth = std::min(depth, *n);
  std::vector<FamilyItem> items;
  for (std::size_t i = 0; i < depth; ++i) items.push_back(family.item(i));
  if (items.empty()) return out;
  const int deg = items[0].chi.degree();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it.chi.degree() != deg || !it.chi.is_monic())
      out.push_back({"family-common-degree", i, "chi_" + std::to_string(i) + " = " + it.chi.str()});
    if (i + 1 < items.size() && !(it.gamma < items[i + 1].gamma))
      out.push_back({"family-gamma-increasing", i, it.gamma.str() + " >= " + items[i + 1].gamma.str()});
    const GroupValue below = base(it.chi);
    if (!(below < it.gamma))
      out.push_back({"family-augmentation", i, "gamma " + it.gamma.str() + " <= " + below.str()});
  }
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const InductiveValuation rho = family_member(base, family, i);
    for (std::size_t j = 0; j < items.size(); ++j) {
      const GroupValue lhs = rho(items[j].chi);
      const GroupValue rhs = min(items[i].gamma, items[j].gamma);
      if (!(lhs == rhs))
        out.push_back({"family-min-identity", i,
                       "rho_" + std::to_string(i) + "(chi_" + std::to_string(j) + ") = " + lhs.str() + " != " + rhs.str()});
      if (j > i && equivalent(rho, items[i].chi, items[j].chi))
        out.push_back({"family-nonequivalence", i,
                       "chi_" + std::to_string(j) + " ~ chi_" + std::to_string(i) + " under rho_" + std::to_string(i)});
    }
  }
  return out;
}

}  // namespace valchain
