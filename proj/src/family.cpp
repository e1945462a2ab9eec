#include "valchain/family.hpp"

#include <cmath>
#include <stdexcept>

namespace valchain {

namespace {

constexpr std::size_t kMaxDigits = std::size_t{1} << 14;

mpz_class mod_reduce(const Rational& q, const mpz_class& m) {
  mpz_class inv;
  mpz_class den = q.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::invalid_argument("coefficient is not p-integral");
  mpz_class r = (q.get_num() * inv) % m;
  if (r < 0) r += m;
  return r;
}

mpz_class eval_mod(const Poly& f, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + mod_reduce(*it, m)) % m;
  return acc;
}

Poly derivative(const Poly& f) {
  if (f.degree() < 1) return {};
  std::vector<Rational> out;
  for (int k = 1; k <= f.degree(); ++k) out.push_back(f.coeff(static_cast<std::size_t>(k)) * k);
  return Poly(std::move(out));
}

bool is_square(std::size_t k) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(k)));
  while (r * r > k) --r;
  while ((r + 1) * (r + 1) <= k) ++r;
  return r * r == k;
}

bool is_triangular(std::size_t k) { return is_square(8 * k + 1); }

long stream_digit(const std::string& rule, std::size_t k) {
  if (rule == "squares") return is_square(k) ? 1 : 0;
  if (rule == "triangular") return is_triangular(k) ? 1 : 0;
  throw std::invalid_argument("unknown digit rule '" + rule + "'");
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ExplicitList: return "explicit-list";
    case FamilyKind::HenselDigits: return "hensel-digit-stream";
    case FamilyKind::DigitStream: return "custom-digit-stream";
  }
  return "?";
}

FamilyKind family_kind_from_string(const std::string& name) {
  if (name == "explicit-list") return FamilyKind::ExplicitList;
  if (name == "hensel-digit-stream" || name == "hensel") return FamilyKind::HenselDigits;
  if (name == "custom-digit-stream" || name == "digit-stream") return FamilyKind::DigitStream;
  throw std::invalid_argument("unknown family kind '" + name + "'");
}

std::vector<long> hensel_digits(const BaseField& field, const Poly& target, const Rational& root,
                                std::size_t n) {
  if (!target.is_monic() || target.degree() < 1)
    throw std::invalid_argument("Hensel target must be monic of positive degree");
  const mpz_class p = field.prime();
  const Poly dtarget = derivative(target);
  mpz_class x = mod_reduce(root, p);
  if (eval_mod(target, x, p) != 0)
    throw std::invalid_argument("Hensel seed is not a root of the target mod p");
  if (eval_mod(dtarget, x, p) == 0)
    throw std::invalid_argument("Hensel seed is not a simple root mod p");
  mpz_class m = p;
  for (std::size_t k = 1; k < n; ++k) {
    m *= p;
    mpz_class fx = eval_mod(target, x, m);
    mpz_class dfx = eval_mod(dtarget, x, m);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), dfx.get_mpz_t(), m.get_mpz_t());
    x = (x - fx * inv) % m;
    if (x < 0) x += m;
  }
  std::vector<long> digits;
  digits.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class d = x % p;
    digits.push_back(d.get_si());
    x /= p;
  }
  return digits;
}

struct ContinuousFamily::Impl {
  BaseField field;
  FamilySpec spec;
  std::vector<FamilyItem> cache;
  std::vector<Rational> approximants;

  Impl(BaseField f, FamilySpec s) : field(f), spec(std::move(s)) {}

  std::vector<long> digits(std::size_t n) const {
    if (spec.kind == FamilyKind::HenselDigits) return hensel_digits(field, spec.target, spec.root, n);
    std::vector<long> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = stream_digit(spec.rule, k);
    return out;
  }

  // Members 0..count-1 of the underlying (unshifted) digit family.
  void digit_items(std::size_t count, std::vector<FamilyItem>& items, std::vector<Rational>& approx) const {
    std::size_t n = 64;
    while (true) {
      auto d = digits(n);
      std::vector<std::size_t> points{0};
      for (std::size_t k = 1; k < n && points.size() < count + 1; ++k)
        if (d[k] != 0) points.push_back(k);
      if (points.size() >= count + 1) {
        items.clear();
        approx.clear();
        mpz_class a = 0;
        mpz_class pk = 1;
        std::size_t k = 0;
        const mpz_class p = field.prime();
        for (std::size_t i = 0; i < count; ++i) {
          for (; k <= points[i]; ++k, pk *= p) a += d[k] * pk;
          approx.emplace_back(a);
          items.push_back({Poly::linear(Rational(a)), field.embed(Rational(static_cast<long>(points[i + 1])))});
        }
        return;
      }
      if (n >= kMaxDigits)
        throw std::domain_error("digit stream has no further nonzero digit; the limit looks rational");
      n *= 2;
    }
  }

  void fill(std::size_t count) {
    if (spec.kind == FamilyKind::ExplicitList) return;
    digit_items(spec.start + count, cache, approximants);
  }
};

ContinuousFamily::ContinuousFamily(BaseField field, FamilySpec spec) {
  if (spec.window < 2) throw std::invalid_argument("stability window must be >= 2");
  auto impl = std::make_shared<Impl>(field, std::move(spec));
  const FamilySpec& s = impl->spec;
  if (s.kind == FamilyKind::ExplicitList) {
    if (s.start >= s.items.size()) throw std::invalid_argument("explicit family is empty");
    for (const auto& it : s.items)
      if (!it.chi.is_monic()) throw std::invalid_argument("family polynomial not monic: " + it.chi.str());
  } else if (s.kind == FamilyKind::HenselDigits) {
    hensel_digits(field, s.target, s.root, 2);  // validates the seed root
  } else {
    stream_digit(s.rule, 0);
  }
  impl->fill(4 * s.window + 8);
  impl_ = std::move(impl);
}

const FamilySpec& ContinuousFamily::spec() const { return impl_->spec; }
const BaseField& ContinuousFamily::field() const { return impl_->field; }

FamilyItem ContinuousFamily::item(std::size_t i) const {
  const auto& s = impl_->spec;
  const std::size_t idx = s.start + i;
  if (s.kind == FamilyKind::ExplicitList) {
    if (idx >= s.items.size()) throw std::out_of_range("explicit family exhausted at index " + std::to_string(i));
    return s.items[idx];
  }
  if (idx < impl_->cache.size()) return impl_->cache[idx];
  std::vector<FamilyItem> items;
  std::vector<Rational> approx;
  impl_->digit_items(idx + 1, items, approx);
  return items[idx];
}

Rational ContinuousFamily::approximant(std::size_t i) const {
  const auto& s = impl_->spec;
  if (s.kind == FamilyKind::ExplicitList) throw std::logic_error("explicit families have no approximants");
  const std::size_t idx = s.start + i;
  if (idx < impl_->approximants.size()) return impl_->approximants[idx];
  std::vector<FamilyItem> items;
  std::vector<Rational> approx;
  impl_->digit_items(idx + 1, items, approx);
  return approx[idx];
}

std::optional<std::size_t> ContinuousFamily::size() const {
  const auto& s = impl_->spec;
  if (s.kind == FamilyKind::ExplicitList) return s.items.size() - s.start;
  return std::nullopt;
}

int ContinuousFamily::degree() const { return item(0).chi.degree(); }

ContinuousFamily ContinuousFamily::with_window(std::size_t window) const {
  FamilySpec s = impl_->spec;
  s.window = window;
  return ContinuousFamily(impl_->field, std::move(s));
}

bool operator==(const ContinuousFamily& a, const ContinuousFamily& b) {
  return a.impl_ == b.impl_ || (a.impl_->field == b.impl_->field && a.impl_->spec == b.impl_->spec);
}

}  // namespace valchain
