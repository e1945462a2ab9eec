#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "valchain/family.hpp"
#include "valchain/polyfield.hpp"
#include "valchain/values.hpp"

namespace valchain {

/// Depth-zero data w_{α,δ}.
struct Seed {
  Rational alpha;
  GroupValue delta;
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// [w'; φ, γ]
struct OrdinaryStep {
  Poly phi;
  GroupValue gamma;
  friend bool operator==(const OrdinaryStep&, const OrdinaryStep&) = default;
};

/// [W; φ, γ] over a continuous family W of augmentations of the previous
/// valuation.
struct LimitStep {
  ContinuousFamily family;
  Poly phi;
  GroupValue gamma;
  friend bool operator==(const LimitStep&, const LimitStep&) = default;
};

/// Stable limit ρ_W of a continuous family. Only allowed as the last step.
struct StableLimitStep {
  ContinuousFamily family;
  friend bool operator==(const StableLimitStep&, const StableLimitStep&) = default;
};

using Step = std::variant<OrdinaryStep, LimitStep, StableLimitStep>;

std::string step_type_name(const Step& step);

/// Raised when an evaluation needs the stable value of a polynomial whose
/// values under the family do not settle within the inspection window.
class UnresolvedStability : public std::runtime_error {
 public:
  UnresolvedStability(const std::string& what, std::vector<GroupValue> prefix)
      : std::runtime_error(what), prefix_(std::move(prefix)) {}
  const std::vector<GroupValue>& prefix() const { return prefix_; }

 private:
  std::vector<GroupValue> prefix_;
};

/// A valuation on K[X] given as a depth-zero seed followed by augmentation
/// steps. Immutable; evaluation is a pure function of the chain data.
class InductiveValuation {
 public:
  InductiveValuation(BaseField field, Seed seed, std::vector<Step> steps = {});

  const BaseField& field() const { return field_; }
  const Seed& seed() const { return seed_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t depth() const { return steps_.size(); }

  /// Chain made of the seed and the first k steps.
  InductiveValuation prefix(std::size_t k) const;
  /// Appends a step; throws if the chain already ends in a stable limit.
  InductiveValuation extended(Step step) const;

  bool ends_in_stable_limit() const;
  /// Last key polynomial: the last step's φ, or X - α at depth zero.
  /// Throws for chains ending in a stable limit.
  Poly key_polynomial() const;
  /// deg of the last key polynomial.
  int degree() const { return key_polynomial().degree(); }
  /// Value at the last key polynomial (δ at depth zero).
  GroupValue key_value() const;

  /// Highest coordinate count among the values the chain can produce.
  std::size_t value_rank() const;

  GroupValue operator()(const Poly& f) const;

  friend bool operator==(const InductiveValuation&, const InductiveValuation&) = default;

 private:
  BaseField field_;
  Seed seed_;
  std::vector<Step> steps_;
};

/// w_{α,δ}(f) = min_i { v(c_i) + i δ } over the (X - α)-expansion.
GroupValue eval_depth_zero(const BaseField& field, const Rational& alpha, const GroupValue& delta,
                           const Poly& f);

GroupValue eval_chain(const InductiveValuation& w, const Poly& f);

/// w_Q(f) = min_i { w(f_i) + i w(Q) } over the Q-expansion of f.
GroupValue truncate(const InductiveValuation& w, const Poly& q, const Poly& f);

/// f ~_w g: w(f) = w(g) < w(f - g). f, g nonzero.
bool equivalent(const InductiveValuation& w, const Poly& f, const Poly& g);

/// φ |_w f decided through an infinitesimal augmentation [w; φ, w(φ) + ι].
bool divides_w(const InductiveValuation& w, const Poly& phi, const Poly& f);

/// True iff `low` is `high` truncated to a step prefix.
bool is_chain_prefix(const InductiveValuation& low, const InductiveValuation& high);

/// w_low(g) < w_high(g); the chains must be comparable by prefix.
bool value_increases(const InductiveValuation& low, const InductiveValuation& high, const Poly& g);

/// Minimal degree among candidates whose value strictly increases.
std::optional<int> phi_degree(const InductiveValuation& low, const InductiveValuation& high,
                              const std::vector<Poly>& candidates);

enum class Stability { Exact, Heuristic, Unstable, Unresolved };
std::string to_string(Stability s);

struct StableValue {
  Stability status = Stability::Unresolved;
  GroupValue value;                 // meaningful for Exact/Heuristic
  std::size_t from_index = 0;       // first index of the stable run
  std::vector<GroupValue> observed; // ρ_0(f), ρ_1(f), ... as inspected

  bool stable() const { return status == Stability::Exact || status == Stability::Heuristic; }
};

/// ρ_i(f) for the i-th member [base; χ_i, γ_i].
GroupValue family_member_value(const InductiveValuation& base, const ContinuousFamily& family, std::size_t i,
                               const Poly& f);

/// ρ_i as a chain: base extended by the ordinary step (χ_i, γ_i).
InductiveValuation family_member(const InductiveValuation& base, const ContinuousFamily& family, std::size_t i);

/// Stable value of f under the family over `base`.
///
/// At each index the χ_i-expansion is inspected: when the constant term is
/// strictly dominant the value is certified (Exact), since every later member
/// agrees with ρ_i on it. Otherwise a run of `window` equal values is
/// accepted as Heuristic, a strictly increasing run of 4 * window values
/// is reported Unstable, and anything else Unresolved.
StableValue family_stable_value(const InductiveValuation& base, const ContinuousFamily& family, const Poly& f);

struct FamilyFinding {
  std::string axiom;
  std::size_t index = 0;
  std::string detail;
};

/// Checks the defining properties of a continuous family of augmentations of
/// `base` on members 0..depth-1: γ strictly increasing, common degree,
/// γ_i > base(χ_i), ρ_i(χ_j) = min{γ_i, γ_j}, and χ_j not ρ_i-equivalent to χ_i.
std::vector<FamilyFinding> check_family(const InductiveValuation& base, const ContinuousFamily& family,
                                        std::size_t depth);

}  // namespace valchain
