#pragma once

#include <cstdint>
#include <random>

#include "valchain/polyfield.hpp"

namespace valchain {

/// Reproducible stream of random rationals and polynomials. Numerators are
/// drawn from [-p^3, p^3]; one coefficient in four carries a denominator p.
class PolySampler {
 public:
  PolySampler(const BaseField& field, std::uint64_t seed);

  Rational coefficient();
  Rational nonzero_coefficient();
  /// Nonzero polynomial of degree uniform in [0, max_degree].
  Poly poly(int max_degree);
  /// Nonzero polynomial of degree uniform in [min_degree, max_degree].
  Poly poly(int min_degree, int max_degree);
  Poly monic(int degree);
  int uniform(int lo, int hi);

 private:
  long p_;
  long bound_;
  std::mt19937_64 rng_;
};

}  // namespace valchain
