#include "valchain/chains.hpp"

#include <algorithm>

#include "valchain/keypoly.hpp"
#include "valchain/sampling.hpp"

namespace valchain {

const BaseField& MLVChain::field() const { return finite_ ? finite_->field() : generator_->field(); }

const InductiveValuation& MLVChain::chain() const {
  if (!finite_) throw std::logic_error("infinite chain has no finite step list");
  return *finite_;
}

InductiveValuation MLVChain::prefix(std::size_t depth) const {
  if (generator_) return generator_->prefix(depth);
  return finite_->prefix(std::min(depth, finite_->depth()));
}

std::string to_string(SequenceShape shape) {
  switch (shape) {
    case SequenceShape::Finite: return "finite";
    case SequenceShape::FiniteWithTail: return "finite-with-tail";
    case SequenceShape::Infinite: return "infinite";
    case SequenceShape::Undetermined: return "undetermined";
  }
  return "undetermined";
}

SequenceShape sequence_shape_from_string(const std::string& name) {
  if (name == "finite") return SequenceShape::Finite;
  if (name == "finite-with-tail") return SequenceShape::FiniteWithTail;
  if (name == "infinite") return SequenceShape::Infinite;
  if (name == "undetermined") return SequenceShape::Undetermined;
  throw std::invalid_argument("unknown sequence shape '" + name + "'");
}

ABKPSequence::ABKPSequence(BaseField field, std::vector<Block> blocks, SequenceShape shape)
    : field_(field), blocks_(std::move(blocks)), shape_(shape) {
  if (shape_ == SequenceShape::Infinite) throw std::invalid_argument("infinite sequences need a generator");
  if (blocks_.empty()) throw std::invalid_argument("sequence has no blocks");
}

ABKPSequence::ABKPSequence(BaseField field, ChainGenerator generator)
    : field_(field), shape_(SequenceShape::Infinite), generator_(std::move(generator)) {
  if (!(generator_->field() == field_)) throw std::invalid_argument("generator field differs from the sequence field");
}

std::vector<Block> ABKPSequence::inspected_blocks(std::size_t depth) const {
  if (!generator_) return blocks_;
  return mlv_to_abkp_unchecked(MLVChain(generator_->prefix(depth))).blocks();
}

bool ValidationReport::has(const std::string& axiom) const {
  return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return f.axiom == axiom; });
}

namespace {

struct Entry {
  Poly q;
  GroupValue gamma;
  std::string location;
};

std::size_t tail_count(const ContinuousFamily& family, std::size_t depth) {
  const auto size = family.size();
  return size ? std::min(*size, depth) : depth;
}

std::vector<Entry> flatten(const std::vector<Block>& blocks, std::size_t depth) {
  std::vector<Entry> out;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const std::string loc = "block " + std::to_string(j);
    out.push_back({blocks[j].head, blocks[j].gamma, loc});
    if (!blocks[j].tail) continue;
    for (std::size_t i = 0; i < tail_count(*blocks[j].tail, depth); ++i) {
      FamilyItem item = blocks[j].tail->item(i);
      out.push_back({std::move(item.chi), std::move(item.gamma), loc + ", tail " + std::to_string(i)});
    }
  }
  return out;
}

std::string step_location(std::size_t n) { return "step " + std::to_string(n); }

void add_family_findings(ValidationReport& report, const InductiveValuation& base, const ContinuousFamily& family,
                         std::size_t depth, const std::string& location) {
  for (auto& f : check_family(base, family, depth))
    report.findings.push_back({f.axiom, location + ", member " + std::to_string(f.index), f.detail});
}

std::string unresolved_detail(const UnresolvedStability& e) {
  std::string s = e.what();
  s += "; observed";
  for (const auto& v : e.prefix()) s += " " + v.str();
  return s;
}

void check_step(ValidationReport& report, const InductiveValuation& low, const InductiveValuation& high,
                const std::vector<Poly>& probes, std::size_t depth, std::size_t n) {
  const std::string loc = step_location(n);
  const Step& step = high.steps().back();
  const int low_degree = low.degree();

  auto check_phi = [&](const Poly& phi, const GroupValue& gamma) {
    if (!(low.key_value() < gamma))
      report.findings.push_back({"gamma-increasing", loc, gamma.str() + " does not exceed " + low.key_value().str()});
    if (phi.degree() % low_degree != 0)
      report.findings.push_back({"degree-divisibility", loc,
                                 "deg " + phi.str() + " is not a multiple of " + std::to_string(low_degree)});
  };
  auto check_lower_key = [&]() {
    const Poly key = low.key_polynomial();
    if (value_increases(low, high, key))
      report.findings.push_back({"limit-phi-not-increasing", loc,
                                 key.str() + " increases from " + low(key).str() + " to " + high(key).str()});
  };
  auto check_limit_degree = [&](const ContinuousFamily& family) {
    if (family.degree() != low_degree)
      report.findings.push_back({"limit-degree", loc,
                                 "family degree " + std::to_string(family.degree()) + " differs from deg(w_n) = " +
                                     std::to_string(low_degree)});
  };

  if (const auto* o = std::get_if<OrdinaryStep>(&step)) {
    check_phi(o->phi, o->gamma);
    const GroupValue before = low(o->phi);
    if (!(before < o->gamma))
      report.findings.push_back({"augmentation-value", loc, "w_n(" + o->phi.str() + ") = " + before.str() +
                                                                " is not below " + o->gamma.str()});
    const auto d = phi_degree(low, high, probes);
    if (!d || *d <= low_degree)
      report.findings.push_back({"ordinary-degree-growth", loc,
                                 "deg Phi = " + (d ? std::to_string(*d) : std::string("?")) +
                                     " does not exceed deg(w_n) = " + std::to_string(low_degree)});
  } else if (const auto* l = std::get_if<LimitStep>(&step)) {
    check_phi(l->phi, l->gamma);
    add_family_findings(report, low, l->family, depth, loc);
    check_limit_degree(l->family);
    const auto d = phi_degree(low, high, probes);
    if (d && *d != low_degree)
      report.findings.push_back({"limit-degree", loc, "deg Phi = " + std::to_string(*d) + " differs from deg(w_n) = " +
                                                          std::to_string(low_degree)});
    check_lower_key();
    const StableValue sv = family_stable_value(low, l->family, l->phi);
    if (sv.stable())
      report.findings.push_back({"limit-key-unstable", loc, l->phi.str() + " is stable with value " + sv.value.str()});
    else if (sv.status == Stability::Unresolved)
      report.findings.push_back({"stability", loc, "stability of " + l->phi.str() + " unresolved"});
    for (std::size_t i = 0; i < sv.observed.size(); ++i)
      if (!(sv.observed[i] < l->gamma)) {
        report.findings.push_back({"limit-gamma", loc, "rho_" + std::to_string(i) + "(" + l->phi.str() + ") = " +
                                                           sv.observed[i].str() + " is not below " + l->gamma.str()});
        break;
      }
  } else {
    const auto& s = std::get<StableLimitStep>(step);
    add_family_findings(report, low, s.family, depth, loc);
    check_limit_degree(s.family);
    check_lower_key();
  }
}

}  // namespace

ValidationReport validate_chain(const MLVChain& chain, std::size_t depth, const std::vector<Poly>& candidates,
                                const ValidationOptions& options) {
  ValidationReport report;
  const InductiveValuation w = chain.prefix(depth);
  report.inspected_depth = w.depth();

  std::vector<Poly> probes = candidates;
  probes.push_back(Poly::linear(w.seed().alpha));
  for (const auto& step : w.steps()) {
    if (const auto* o = std::get_if<OrdinaryStep>(&step)) probes.push_back(o->phi);
    const ContinuousFamily* family = nullptr;
    if (const auto* l = std::get_if<LimitStep>(&step)) {
      probes.push_back(l->phi);
      family = &l->family;
    }
    if (const auto* s = std::get_if<StableLimitStep>(&step)) family = &s->family;
    if (family)
      for (std::size_t i = 0; i < tail_count(*family, family->window()); ++i) probes.push_back(family->item(i).chi);
  }

  for (std::size_t n = 0; n < w.depth(); ++n) {
    const InductiveValuation low = w.prefix(n);
    const InductiveValuation high = w.prefix(n + 1);
    try {
      check_step(report, low, high, probes, depth, n);
      const auto mult = check_multiplicativity(high, options.samples, options.degree_bound, options.seed);
      if (!mult.passed()) {
        const auto& f = mult.failures.front();
        report.findings.push_back({"multiplicativity", step_location(n),
                                   "witness (" + f.f.str() + ", " + f.g.str() + "): w(fg) = " +
                                       f.value_of_product.str() + " but w(f) + w(g) = " + f.sum_of_values.str()});
      }
    } catch (const UnresolvedStability& e) {
      report.findings.push_back({"stability", step_location(n), unresolved_detail(e)});
    }
  }
  return report;
}

ValidationReport validate_sequence(const ABKPSequence& seq, std::size_t depth, const ValidationOptions& options) {
  ValidationReport report;
  report.inspected_depth = depth;
  const std::vector<Block> blocks = seq.inspected_blocks(depth);
  auto add = [&](std::string axiom, std::string location, std::string detail) {
    report.findings.push_back({std::move(axiom), std::move(location), std::move(detail)});
  };

  const bool last_tail = blocks.back().tail.has_value();
  if (seq.shape() == SequenceShape::Finite && last_tail)
    add("shape", "block " + std::to_string(blocks.size() - 1), "finite sequence ends in a tail");
  if (seq.shape() == SequenceShape::FiniteWithTail && !last_tail)
    add("shape", "block " + std::to_string(blocks.size() - 1), "declared final tail is missing");
  if (blocks.front().head.degree() != 1)
    add("first-degree-one", "block 0", "deg Q_0 = " + std::to_string(blocks.front().head.degree()));
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const std::string loc = "block " + std::to_string(j);
    if (!blocks[j].head.is_monic()) add("monic", loc, blocks[j].head.str() + " is not monic");
    if (blocks[j].tail && blocks[j].tail->degree() != blocks[j].head.degree())
      add("block-degree", loc, "tail degree differs from deg " + blocks[j].head.str());
    if (j > 0 && blocks[j].head.degree() <= blocks[j - 1].head.degree())
      add("block-degree", loc, "degree does not grow across blocks");
  }
  const std::vector<Entry> entries = flatten(blocks, depth);
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (!(entries[i - 1].gamma < entries[i].gamma))
      add("gamma-increasing", entries[i].location,
          entries[i].gamma.str() + " does not exceed " + entries[i - 1].gamma.str());
  if (!report.passed()) return report;  // the semantic checks need a well-formed sequence

  try {
    const MLVChain chain = abkp_to_mlv_unchecked(seq);
    const InductiveValuation w = chain.prefix(depth);
    std::vector<GroupValue> eps;
    for (const auto& e : entries) {
      const GroupValue wq = w(e.q);
      if (!(wq == e.gamma)) add("gamma-value", e.location, "w(" + e.q.str() + ") = " + wq.str() + " but gamma = " + e.gamma.str());
      eps.push_back(epsilon(w, e.q));
    }
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (!(eps[i - 1] < eps[i]))
        add("epsilon-increasing", entries[i].location, eps[i].str() + " does not exceed " + eps[i - 1].str());
      const GroupValue cut = truncate(w, entries[i - 1].q, entries[i].q);
      if (!(cut < entries[i].gamma))
        add("truncation-drop", entries[i].location,
            "w_Q(Q') = " + cut.str() + " is not below w(Q') = " + entries[i].gamma.str());
    }
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (blocks[j].tail) add_family_findings(report, w.prefix(j), *blocks[j].tail, depth, "block " + std::to_string(j));

    PolySampler sampler(seq.field(), options.seed);
    for (std::size_t n = 0; n < options.samples; ++n) {
      const Poly f = sampler.poly(1, options.degree_bound);
      const GroupValue wf = w(f);
      const bool complete = std::any_of(entries.begin(), entries.end(), [&](const Entry& e) {
        return e.q.degree() <= f.degree() && truncate(w, e.q, f) == wf;
      });
      if (!complete) add("completeness", "sample " + std::to_string(n), "no inspected truncation attains w(" + f.str() + ")");
    }
  } catch (const UnresolvedStability& e) {
    add("stability", "sequence", unresolved_detail(e));
  }
  return report;
}

MLVChain abkp_to_mlv_unchecked(const ABKPSequence& seq) {
  if (seq.generator()) return MLVChain(*seq.generator());
  const auto& blocks = seq.blocks();
  const Block& first = blocks.front();
  if (first.head.degree() != 1 || !first.head.is_monic()) throw std::invalid_argument("Q_0 must be monic of degree 1");
  std::vector<Step> steps;
  for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
    const Block& next = blocks[j + 1];
    if (blocks[j].tail)
      steps.emplace_back(LimitStep{*blocks[j].tail, next.head, next.gamma});
    else
      steps.emplace_back(OrdinaryStep{next.head, next.gamma});
  }
  if (blocks.back().tail) steps.emplace_back(StableLimitStep{*blocks.back().tail});
  return MLVChain(InductiveValuation(seq.field(), Seed{-first.head.coeff(0), first.gamma}, std::move(steps)));
}

MLVChain abkp_to_mlv(const ABKPSequence& seq, std::size_t depth, const ValidationOptions& options) {
  ValidationReport report = validate_sequence(seq, depth, options);
  if (!report.passed()) {
    const std::string what = "sequence fails validation: " + report.findings.front().axiom;
    throw ConversionError(what, std::move(report));
  }
  return abkp_to_mlv_unchecked(seq);
}

ABKPSequence mlv_to_abkp_unchecked(const MLVChain& chain) {
  if (chain.is_infinite()) return ABKPSequence(chain.field(), *chain.generator());
  const InductiveValuation& w = chain.chain();
  std::vector<Block> blocks{Block{Poly::linear(w.seed().alpha), w.seed().delta, std::nullopt}};
  for (const auto& step : w.steps()) {
    if (const auto* o = std::get_if<OrdinaryStep>(&step)) {
      blocks.push_back({o->phi, o->gamma, std::nullopt});
    } else if (const auto* l = std::get_if<LimitStep>(&step)) {
      blocks.back().tail = l->family;
      blocks.push_back({l->phi, l->gamma, std::nullopt});
    } else {
      blocks.back().tail = std::get<StableLimitStep>(step).family;
    }
  }
  const SequenceShape shape = blocks.back().tail ? SequenceShape::FiniteWithTail : SequenceShape::Finite;
  return ABKPSequence(w.field(), std::move(blocks), shape);
}

ABKPSequence mlv_to_abkp(const MLVChain& chain, std::size_t depth, const std::vector<Poly>& candidates,
                         const ValidationOptions& options) {
  ValidationReport report = validate_chain(chain, depth, candidates, options);
  if (!report.passed()) {
    const std::string what = "chain fails validation: " + report.findings.front().axiom;
    throw ConversionError(what, std::move(report));
  }
  return mlv_to_abkp_unchecked(chain);
}

GroupValue eval_sequence(const ABKPSequence& seq, const Poly& f, std::size_t depth) {
  const std::vector<Entry> entries = flatten(seq.inspected_blocks(depth), depth);
  const BaseField& field = seq.field();
  auto eval = [&](const auto& self, const Poly& g) -> GroupValue {
    if (g.degree() < 1) return field.valuation(g.coeff(0));
    std::optional<GroupValue> best;
    for (const auto& e : entries) {
      if (e.q.degree() > g.degree()) continue;
      const auto expansion = phi_expansion(g, e.q);
      GroupValue cut = GroupValue::infinity();
      for (std::size_t k = 0; k < expansion.size(); ++k) {
        if (expansion[k].is_zero()) continue;
        cut = min(cut, self(self, expansion[k]) + e.gamma.times(static_cast<long>(k)));
      }
      if (!best || *best < cut) best = cut;
    }
    return *best;
  };
  return eval(eval, f);
}

std::string Classification::str() const {
  switch (kind) {
    case ExtensionKind::ValuationTranscendental: return "valuation-transcendental";
    case ExtensionKind::ValuationAlgebraic: return "valuation-algebraic";
    case ExtensionKind::Undetermined: return "undetermined at depth " + std::to_string(depth);
  }
  return "undetermined";
}

Classification classify(const ABKPSequence& seq, std::size_t depth) {
  switch (seq.shape()) {
    case SequenceShape::Finite: return {ExtensionKind::ValuationTranscendental, depth};
    case SequenceShape::FiniteWithTail:
    case SequenceShape::Infinite: return {ExtensionKind::ValuationAlgebraic, depth};
    case SequenceShape::Undetermined: break;
  }
  return {ExtensionKind::Undetermined, depth};
}

}  // namespace valchain
