#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace valchain {

/// Arbitrary-precision rational, always kept canonical (reduced, positive
/// denominator).
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Element of a totally ordered abelian group realised as a finite tuple of
/// rationals under the lexicographic order (most significant coordinate
/// first), or the formal top element. Tuples of different length compare as
/// if zero-padded on the right; trailing zeros are dropped on construction so
/// equal values have equal representations.
class GroupValue {
 public:
  /// The zero element.
  GroupValue() = default;
  explicit GroupValue(const Rational& q);
  explicit GroupValue(std::vector<Rational> coords);
  GroupValue(long n) : GroupValue(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  static GroupValue infinity();
  /// 1 at coordinate `index`, 0 elsewhere.
  static GroupValue unit(std::size_t index);

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && coords_.empty(); }
  /// Number of stored coordinates (after trimming trailing zeros).
  std::size_t rank() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  Rational coord(std::size_t index) const;

  GroupValue operator-() const;
  GroupValue& operator+=(const GroupValue& other);
  friend GroupValue operator+(GroupValue a, const GroupValue& b) { return a += b; }
  /// a - b; subtracting infinity is undefined and throws.
  friend GroupValue operator-(const GroupValue& a, const GroupValue& b);

  /// n * a. Throws std::domain_error for n <= 0 when a is infinite.
  GroupValue times(long n) const;
  /// q * a for a rational q. Same restriction as times() for infinity.
  GroupValue scaled(const Rational& q) const;

  friend std::strong_ordering operator<=>(const GroupValue& a, const GroupValue& b);
  friend bool operator==(const GroupValue& a, const GroupValue& b);

  /// "inf", "a/b" for a single coordinate, "(a/b, c/d, ...)" otherwise.
  std::string str() const;
  static GroupValue parse(std::string_view text);

 private:
  void trim();

  bool infinite_ = false;
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const GroupValue& v);

inline const GroupValue& min(const GroupValue& a, const GroupValue& b) { return b < a ? b : a; }
inline const GroupValue& max(const GroupValue& a, const GroupValue& b) { return a < b ? b : a; }

}  // namespace valchain
