#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "valchain/generators.hpp"
#include "valchain/valuation.hpp"

namespace valchain {

/// A MacLane-Vaquié chain: either a finite chain (steps annotated ordinary /
/// limit, optionally ending in a stable limit) or an infinite chain given by a
/// deterministic generator.
class MLVChain {
 public:
  explicit MLVChain(InductiveValuation chain) : finite_(std::move(chain)) {}
  explicit MLVChain(ChainGenerator generator) : generator_(std::move(generator)) {}

  bool is_infinite() const { return generator_.has_value(); }
  const BaseField& field() const;
  /// The finite chain; throws std::logic_error for infinite chains.
  const InductiveValuation& chain() const;
  const std::optional<ChainGenerator>& generator() const { return generator_; }
  /// The first `depth` steps (the whole chain when it is shorter).
  InductiveValuation prefix(std::size_t depth) const;

  friend bool operator==(const MLVChain&, const MLVChain&) = default;

 private:
  std::optional<InductiveValuation> finite_;
  std::optional<ChainGenerator> generator_;
};

/// Block Δ_j: head Q_j with γ_j = w(Q_j), and an optional tail ϑ_j given as a
/// continuous family whose χ_i are the tail polynomials.
struct Block {
  Poly head;
  GroupValue gamma;
  std::optional<ContinuousFamily> tail;
  friend bool operator==(const Block&, const Block&) = default;
};

enum class SequenceShape { Finite, FiniteWithTail, Infinite, Undetermined };
std::string to_string(SequenceShape shape);
SequenceShape sequence_shape_from_string(const std::string& name);

/// An induced complete sequence of abstract key polynomials, grouped in blocks.
/// Infinite sequences are produced lazily from a chain generator.
class ABKPSequence {
 public:
  ABKPSequence(BaseField field, std::vector<Block> blocks, SequenceShape shape);
  ABKPSequence(BaseField field, ChainGenerator generator);

  const BaseField& field() const { return field_; }
  SequenceShape shape() const { return shape_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::optional<ChainGenerator>& generator() const { return generator_; }
  /// Blocks up to inspection depth (generated for infinite sequences).
  std::vector<Block> inspected_blocks(std::size_t depth) const;

  friend bool operator==(const ABKPSequence&, const ABKPSequence&) = default;

 private:
  BaseField field_;
  std::vector<Block> blocks_;
  SequenceShape shape_;
  std::optional<ChainGenerator> generator_;
};

struct Finding {
  std::string axiom;
  std::string location;
  std::string detail;
  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;
  std::size_t inspected_depth = 0;
  bool passed() const { return findings.empty(); }
  bool has(const std::string& axiom) const;
};

struct ValidationOptions {
  std::size_t samples = 40;
  int degree_bound = 6;
  std::uint64_t seed = 1;
};

class ConversionError : public std::invalid_argument {
 public:
  ConversionError(const std::string& what, ValidationReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Checks the chain axioms on its first `depth` steps: increasing γ, degree
/// divisibility and growth, the limit-step conditions, family axioms and a
/// multiplicativity spot-check of every intermediate valuation. Φ-degree
/// probes use `candidates` plus every polynomial of the chain.
ValidationReport validate_chain(const MLVChain& chain, std::size_t depth, const std::vector<Poly>& candidates = {},
                                const ValidationOptions& options = {});

/// Checks the block axioms of a sequence on its first `depth` blocks (and
/// `depth` tail members per block): deg Q_0 = 1, block degrees, γ_i = w(Q_i),
/// γ and ε strictly increasing, w_Q(Q') < w(Q') for adjacent pairs, tails are
/// continuous families, and sampled completeness.
ValidationReport validate_sequence(const ABKPSequence& seq, std::size_t depth, const ValidationOptions& options = {});

/// The chain the sequence induces (no validation).
MLVChain abkp_to_mlv_unchecked(const ABKPSequence& seq);
/// Validates, then converts; throws ConversionError carrying the report.
MLVChain abkp_to_mlv(const ABKPSequence& seq, std::size_t depth, const ValidationOptions& options = {});

ABKPSequence mlv_to_abkp_unchecked(const MLVChain& chain);
ABKPSequence mlv_to_abkp(const MLVChain& chain, std::size_t depth, const std::vector<Poly>& candidates = {},
                         const ValidationOptions& options = {});

/// The valuation the sequence induces, evaluated from the sequence alone:
/// max over the inspected Q_i with deg Q_i <= deg f of w_{Q_i}(f), the
/// coefficients of each expansion being evaluated recursively.
GroupValue eval_sequence(const ABKPSequence& seq, const Poly& f, std::size_t depth);

enum class ExtensionKind { ValuationTranscendental, ValuationAlgebraic, Undetermined };

struct Classification {
  ExtensionKind kind = ExtensionKind::Undetermined;
  std::size_t depth = 0;
  std::string str() const;
};

Classification classify(const ABKPSequence& seq, std::size_t depth);

}  // namespace valchain
