#pragma once

#include <string>
#include <vector>

#include "valchain/chains.hpp"
#include "valchain/io.hpp"

namespace valchain::scenarios {

/// p = 2: w_{0,1/2} followed by [X^2 - 2, 3/2].
MLVChain two_step();

/// Gauss valuation w_{0,0} over Q with v_3.
InductiveValuation gauss3();
/// Hensel family of √7 with a_0 = 1 over the Gauss valuation (rank one).
ContinuousFamily sqrt7_gauss_family(std::size_t window = 8);

/// √7 in Z_3 as a continuous family of augmentations of w_{1,(0,1)}, with v_3
/// embedded in the second coordinate: χ_i = X - a_i for a = 4, 13, ...
ContinuousFamily sqrt7_family(std::size_t window = 8);
/// w_{1,(0,1)} limit-augmented by [W; X^2 - 7, (1, 7/2)].
MLVChain sqrt7(std::size_t window = 8);

/// p = 3: stable limit over the digit stream sum 3^(k^2), on top of w_{1,1}.
MLVChain liouville(std::size_t window = 8);

/// Infinite ramified tower over p = 3.
MLVChain tower();

/// Crafted invalid inputs, each violating one axiom.
MLVChain non_growing_ordinary();     // [w_{0,1/2}; X - 1, 2]
ABKPSequence decreasing_gamma();     // [(X, 1/2), (X^2 - 2, 1/4)]
ABKPSequence first_degree_two();     // Q_0 = X^2 - 2
MLVChain increasing_limit_phi();     // √7 chain on w_{1,(0,1/2)}
MLVChain non_key_augmentation();     // [w_{0,1}; X^2, 5/2] over p = 2

/// Two-step blocks whose continuation is unknown.
ABKPSequence undetermined_sequence();

struct DemoOptions {
  std::size_t depth = 8;
  std::size_t window = 8;
  std::uint64_t seed = 1;
};

struct DemoOutcome {
  std::string name;
  std::vector<std::string> lines;  // human-readable report
  Json structured;
  std::vector<std::string> failed_checks;
  bool passed() const { return failed_checks.empty(); }
};

std::vector<std::string> demo_names();
/// Runs a built-in scenario and its embedded self-checks. Throws
/// std::invalid_argument for unknown names.
DemoOutcome run_demo(const std::string& name, const DemoOptions& options = {});

}  // namespace valchain::scenarios
