#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "valchain/valuation.hpp"

namespace valchain {

/// ε(f) = max_b (w(f) - w(∂_b f)) / b over the nonzero Hasse derivatives.
/// Computable stand-in for δ(f); f must be nonconstant.
GroupValue epsilon(const InductiveValuation& w, const Poly& f);

struct Root {
  Rational value;
  int multiplicity = 1;
};

/// δ for a polynomial split over K: max over roots α of w(X - α).
GroupValue delta_split_oracle(const InductiveValuation& w, const std::vector<Root>& roots);

enum class DeltaMethod { EpsilonSurrogate, SplitRootExact };

struct DeltaResult {
  GroupValue value;
  DeltaMethod method = DeltaMethod::EpsilonSurrogate;
};

/// δ(f): exact through the split-root oracle when `roots` is supplied (and
/// checked to multiply out to f up to a constant), the ε surrogate otherwise.
DeltaResult delta(const InductiveValuation& w, const Poly& f, const std::optional<std::vector<Root>>& roots = {});

enum class AbkpKind { LinearAlways, Abkp, NotAbkp };

struct AbkpVerdict {
  AbkpKind kind = AbkpKind::NotAbkp;
  /// The truncation w_φ when it is known.
  std::optional<InductiveValuation> truncation;
};

class UndecidableAbkp : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Decides whether φ is an abstract key polynomial for w, using only the two
/// characterisations available for chain data:
///  - φ key for a prefix w_low: ABKP iff its value increases from w_low to w
///    (then w_φ = [w_low; φ, w(φ)]) or deg φ = deg(w_low) (then w_φ = w_low);
///  - without w_low, linear φ are always ABKPs, and the last key polynomial
///    of w (deg φ = deg(w)) is one with w_φ = w.
/// Anything else throws UndecidableAbkp.
AbkpVerdict is_abkp(const std::optional<InductiveValuation>& low, const InductiveValuation& w, const Poly& phi);

struct MultiplicativityFailure {
  Poly f;
  Poly g;
  GroupValue value_of_product;
  GroupValue sum_of_values;
};

struct MultiplicativityReport {
  std::size_t checked = 0;
  std::vector<MultiplicativityFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Spot-checks w(fg) = w(f) + w(g) on `sample_count` deterministic pairs:
/// first the monomial pairs (X^a, X^b) and the chain's key polynomials, then
/// seeded random pairs of degree <= degree_bound.
MultiplicativityReport check_multiplicativity(const InductiveValuation& w, std::size_t sample_count,
                                              int degree_bound, std::uint64_t seed);

}  // namespace valchain
