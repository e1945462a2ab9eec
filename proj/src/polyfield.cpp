#include "valchain/polyfield.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace valchain {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long order_of(const mpz_class& n, long p) {
  mpz_class q = n;
  long k = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

}  // namespace

BaseField::BaseField(long p, std::size_t offset) : p_(p), offset_(offset) {
  if (!is_prime(p)) throw std::invalid_argument("base field prime must be prime, got " + std::to_string(p));
}

long BaseField::order(const Rational& c) const {
  if (c == 0) throw std::domain_error("order of zero");
  return order_of(c.get_num(), p_) - order_of(c.get_den(), p_);
}

GroupValue BaseField::valuation(const Rational& c) const {
  if (c == 0) return GroupValue::infinity();
  return embed(Rational(order(c)));
}

GroupValue BaseField::embed(const Rational& q) const {
  std::vector<Rational> coords(offset_ + 1, Rational(0));
  coords[offset_] = q;
  return GroupValue(std::move(coords));
}

GroupValue base_valuation(const BaseField& field, const Rational& c) { return field.valuation(c); }

// ---------------------------------------------------------------------------

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rational& c) : c_{c} { trim(); }

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rational& a) { return Poly({-a, Rational(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod_monic(const Poly& divisor) const {
  if (!divisor.is_monic()) throw std::invalid_argument("divisor must be monic");
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quot(c_.size() - static_cast<std::size_t>(dd), Rational(0));
  for (int k = degree(); k >= dd; --k) {
    const Rational lead = rem[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(k - dd);
    quot[shift] = lead;
    for (int j = 0; j <= dd; ++j) rem[shift + static_cast<std::size_t>(j)] -= lead * divisor.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> Poly::taylor(const Rational& a) const {
  // Repeated synthetic division by (X - a).
  std::vector<Rational> work = c_;
  std::vector<Rational> out;
  out.reserve(work.size());
  for (std::size_t n = work.size(); n > 0; --n) {
    for (std::size_t k = n - 1; k > 0; --k) work[k - 1] += a * work[k];
    out.push_back(work[0]);
    work.erase(work.begin());
  }
  return out;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono = k == 0 ? "" : (k == 1 ? "X" : "X^" + std::to_string(k));
    if (k == 0) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Poly Poly::parse(std::string_view text) {
  // term := [sign] [rational ['*']] ['X' ['^' n]]
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + why);
  };
  Poly result;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw fail("expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational coef = 1;
    bool has_coef = i > start;
    if (has_coef) coef = parse_rational(std::string_view(s).substr(start, i - start));
    std::size_t power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coef) throw fail("dangling '*'");
      ++i;
      if (i >= s.size() || (s[i] != 'X' && s[i] != 'x')) throw fail("expected X after '*'");
    }
    if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t ps = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (ps == i) throw fail("missing exponent");
        power = std::stoul(s.substr(ps, i - ps));
      }
    } else if (!has_coef) {
      throw fail("unexpected character at position " + std::to_string(i));
    }
    result += monomial(coef * sign, power);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.str(); }

std::vector<Poly> phi_expansion(const Poly& f, const Poly& phi) {
  if (!phi.is_monic() || phi.degree() < 1)
    throw std::invalid_argument("expansion base must be monic of degree >= 1, got " + phi.str());
  std::vector<Poly> out;
  Poly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = rest.divmod_monic(phi);
    out.push_back(std::move(r));
    rest = std::move(q);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

Poly hasse_derivative(const Poly& f, int b) {
  if (b <= 0) throw std::invalid_argument("Hasse derivative order must be >= 1");
  if (f.degree() < b) return {};
  std::vector<Rational> out(static_cast<std::size_t>(f.degree() - b + 1), Rational(0));
  const auto ub = static_cast<unsigned long>(b);
  for (int k = b; k <= f.degree(); ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), ub);
    out[static_cast<std::size_t>(k - b)] = Rational(binom) * f.coeff(static_cast<std::size_t>(k));
  }
  return Poly(std::move(out));
}

}  // namespace valchain
