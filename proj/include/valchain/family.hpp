#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "valchain/polyfield.hpp"
#include "valchain/values.hpp"

namespace valchain {

/// Augmentation data (χ_i, γ_i) of one member ρ_i = [w'; χ_i, γ_i].
struct FamilyItem {
  Poly chi;
  GroupValue gamma;
  friend bool operator==(const FamilyItem&, const FamilyItem&) = default;
};

enum class FamilyKind {
  ExplicitList,  ///< finite list of items, for crafted inputs
  HenselDigits,  ///< χ_i = X - a_i, a_i truncations of a simple p-adic root
  DigitStream,   ///< χ_i = X - a_i, a_i truncations of sum d_k p^k for a digit rule
};

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::ExplicitList;
  std::vector<FamilyItem> items;  // ExplicitList
  Poly target;                    // HenselDigits: monic, p-integral
  Rational root;                  // HenselDigits: simple root mod p
  std::string rule;               // DigitStream: "squares" | "triangular"
  std::size_t start = 0;          // index of the first member exposed
  std::size_t window = 8;         // stability window
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Deterministic, immutable indexed generator of augmentation data.
///
/// For the digit kinds the underlying p-adic number α = sum d_k p^k is cut at
/// every nonzero digit: with nonzero-digit positions 0 = e_0 < e_1 < ...,
/// a_i = α mod p^(e_i + 1) and γ_i = v(a_{i+1} - a_i) = e_{i+1}, so that
/// v(a_j - a_i) = γ_i exactly for every j > i.
class ContinuousFamily {
 public:
  ContinuousFamily(BaseField field, FamilySpec spec);

  const FamilySpec& spec() const;
  const BaseField& field() const;
  std::size_t window() const { return spec().window; }

  /// i-th exposed member; throws std::out_of_range past an explicit list.
  FamilyItem item(std::size_t i) const;
  /// Number of members for explicit lists; nullopt for unbounded families.
  std::optional<std::size_t> size() const;
  /// Stable degree, the common degree of the χ_i.
  int degree() const;
  /// The approximated p-adic number's truncation a_i, digit kinds only.
  Rational approximant(std::size_t i) const;

  ContinuousFamily with_window(std::size_t window) const;

  friend bool operator==(const ContinuousFamily& a, const ContinuousFamily& b);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Digits d_0..d_{n-1} of the simple p-adic root of `target` lifted from
/// `root` (mod p). Throws std::invalid_argument if the root is not simple.
std::vector<long> hensel_digits(const BaseField& field, const Poly& target, const Rational& root,
                                std::size_t n);

}  // namespace valchain
