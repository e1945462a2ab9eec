#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "valchain/values.hpp"

namespace valchain {

/// The rationals with the p-adic valuation. Values are embedded into the
/// ambient group at coordinate `offset` (leading coordinates zero), which
/// leaves room for value groups with components dominating the base group.
class BaseField {
 public:
  explicit BaseField(long p, std::size_t offset = 0);

  long prime() const { return p_; }
  std::size_t offset() const { return offset_; }

  /// p-adic order of a nonzero rational.
  long order(const Rational& c) const;
  /// v_p(c) embedded in the ambient group; v(0) = infinity.
  GroupValue valuation(const Rational& c) const;
  /// Embeds a rational multiple of the base value unit.
  GroupValue embed(const Rational& q) const;

  friend bool operator==(const BaseField&, const BaseField&) = default;

 private:
  long p_;
  std::size_t offset_;
};

GroupValue base_valuation(const BaseField& field, const Rational& c);

/// Dense univariate polynomial over the rationals; coeffs()[k] multiplies X^k.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  explicit Poly(const Rational& c);

  static Poly x();
  static Poly monomial(const Rational& c, std::size_t k);
  /// X - a.
  static Poly linear(const Rational& a);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly pow(unsigned n) const;

  /// Quotient and remainder by a monic divisor.
  std::pair<Poly, Poly> divmod_monic(const Poly& divisor) const;

  Rational operator()(const Rational& x) const;
  /// Coefficients of the (X - a)-adic expansion, c_i = (∂_i f)(a).
  std::vector<Rational> taylor(const Rational& a) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Sparse text form, e.g. "X^2 - 7", "1/2*X^3 + 2*X", "0".
  std::string str() const;
  static Poly parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& f);

/// Expansion f = sum f_i phi^i with deg f_i < deg phi. Trailing zero
/// coefficients are trimmed; the zero polynomial expands to an empty list.
std::vector<Poly> phi_expansion(const Poly& f, const Poly& phi);

/// Hasse derivative ∂_b f (b >= 1): coefficient of X^(k-b) is C(k,b) f_k.
Poly hasse_derivative(const Poly& f, int b);

}  // namespace valchain
