#include "valchain/values.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace valchain {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = strip(text);
  auto slash = s.find('/');
  std::string_view num = strip(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : strip(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

GroupValue::GroupValue(const Rational& q) : coords_{q} { trim(); }

GroupValue::GroupValue(std::vector<Rational> coords) : coords_(std::move(coords)) { trim(); }

GroupValue GroupValue::infinity() {
  GroupValue v;
  v.infinite_ = true;
  return v;
}

GroupValue GroupValue::unit(std::size_t index) {
  std::vector<Rational> c(index + 1, Rational(0));
  c[index] = 1;
  return GroupValue(std::move(c));
}

void GroupValue::trim() {
  while (!coords_.empty() && coords_.back() == 0) coords_.pop_back();
}

Rational GroupValue::coord(std::size_t index) const {
  return index < coords_.size() ? coords_[index] : Rational(0);
}

GroupValue GroupValue::operator-() const {
  if (infinite_) throw std::domain_error("negation of infinity is undefined");
  GroupValue r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

GroupValue& GroupValue::operator+=(const GroupValue& other) {
  if (infinite_) return *this;
  if (other.infinite_) return *this = infinity();
  if (coords_.size() < other.coords_.size()) coords_.resize(other.coords_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coords_.size(); ++i) coords_[i] += other.coords_[i];
  trim();
  return *this;
}

GroupValue operator-(const GroupValue& a, const GroupValue& b) {
  if (b.infinite_) throw std::domain_error("subtraction of infinity is undefined");
  return a + (-b);
}

GroupValue GroupValue::times(long n) const { return scaled(Rational(n)); }

GroupValue GroupValue::scaled(const Rational& q) const {
  if (infinite_) {
    if (q <= 0) throw std::domain_error("non-positive multiple of infinity is undefined");
    return infinity();
  }
  GroupValue r = *this;
  for (auto& c : r.coords_) c *= q;
  r.trim();
  return r;
}

std::strong_ordering operator<=>(const GroupValue& a, const GroupValue& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const std::size_t n = std::max(a.coords_.size(), b.coords_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.coord(i), b.coord(i));
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool operator==(const GroupValue& a, const GroupValue& b) {
  return a.infinite_ == b.infinite_ && a.coords_ == b.coords_;
}

std::string GroupValue::str() const {
  if (infinite_) return "inf";
  if (coords_.empty()) return "0";
  if (coords_.size() == 1) return to_string(coords_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += to_string(coords_[i]);
  }
  return out + ")";
}

GroupValue GroupValue::parse(std::string_view text) {
  std::string_view s = strip(text);
  if (s == "inf" || s == "infinity") return infinity();
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("unbalanced tuple: '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<Rational> coords;
    while (true) {
      auto comma = s.find(',');
      coords.push_back(parse_rational(s.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      s.remove_prefix(comma + 1);
    }
    return GroupValue(std::move(coords));
  }
  return GroupValue(parse_rational(s));
}

std::ostream& operator<<(std::ostream& os, const GroupValue& v) { return os << v.str(); }

}  // namespace valchain
