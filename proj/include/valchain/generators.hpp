#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "valchain/valuation.hpp"

namespace valchain {

/// Builds chains whose every step is a ramified ordinary augmentation
///
///   φ_{n+1} = φ_n^{e_n} - u M_n (+ terms of larger w_n-value),
///
/// where e_n is the order of γ_n modulo the value group of w_{n-1} and M_n is
/// the unique monomial p^m X... φ_0^{a_0} ... φ_{n-1}^{a_{n-1}} (0 <= a_k < e_k)
/// of value e_n γ_n. The residual polynomial of φ_{n+1} is linear, so it is a
/// key polynomial for w_n of degree e_n deg φ_n. Base field offset must be 0.
class RamifiedTower {
 public:
  RamifiedTower(BaseField field, Rational alpha, Rational delta);

  std::size_t depth() const { return gammas_.size() - 1; }
  const std::vector<Poly>& key_polynomials() const { return phis_; }
  const std::vector<Rational>& gammas() const { return gammas_; }
  /// Ramification index of the current top value; the degree factor of the
  /// next step.
  long next_ramification() const;

  /// Appends φ_{n+1} built with unit u and optional higher-value perturbation
  /// c * X^j (c chosen so the term cannot change the reduction), with value
  /// gamma > e_n γ_n.
  void push(const Rational& gamma, const Rational& unit, std::optional<std::size_t> perturb_degree = {});

  InductiveValuation chain() const;

 private:
  BaseField field_;
  std::vector<Poly> phis_;
  std::vector<Rational> gammas_;
  std::vector<mpz_class> lcms_;  // lcm of denominators of 1, γ_0..γ_k
};

/// Deterministic generator of an infinite MLV chain. Kind "ramified-tower":
/// w_0 = w_{0,1/2}, γ_{n+1} = 2γ_n + 1/(2 L_n), every step doubling the degree.
class ChainGenerator {
 public:
  ChainGenerator(BaseField field, std::string kind);

  const std::string& kind() const { return kind_; }
  const BaseField& field() const { return field_; }
  Seed seed() const;
  /// The chain made of the first `depth` generated steps.
  InductiveValuation prefix(std::size_t depth) const;

  friend bool operator==(const ChainGenerator&, const ChainGenerator&) = default;

 private:
  BaseField field_;
  std::string kind_;
};

struct RandomChainOptions {
  std::vector<long> primes{2, 3, 5};
  std::size_t max_depth = 3;
  int max_degree = 8;
};

/// Random valid chain of ordinary ramified augmentations.
InductiveValuation random_chain(std::uint64_t seed, const RandomChainOptions& options = {});

}  // namespace valchain
