#include "valchain/generators.hpp"

#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace valchain {

namespace {

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

Rational power_of(long p, long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(mpz_class(1), r) : Rational(r);
}

}  // namespace

RamifiedTower::RamifiedTower(BaseField field, Rational alpha, Rational delta) : field_(field) {
  if (field_.offset() != 0) throw std::invalid_argument("ramified towers need a rank-one base embedding");
  phis_.push_back(Poly::linear(alpha));
  lcms_.push_back(mpz_class(delta.get_den()));
  gammas_.push_back(std::move(delta));
}

long RamifiedTower::next_ramification() const {
  const std::size_t n = depth();
  const mpz_class before = n == 0 ? mpz_class(1) : lcms_[n - 1];
  return mpz_class(lcms_[n] / before).get_si();
}

void RamifiedTower::push(const Rational& gamma, const Rational& unit, std::optional<std::size_t> perturb_degree) {
  const std::size_t n = depth();
  const long e = next_ramification();
  if (e < 2) throw std::invalid_argument("top value is not ramified; the degree cannot grow");
  Rational target = gammas_[n] * e;
  if (!(target < gamma)) throw std::invalid_argument("augmentation value must exceed e * gamma_n");
  if (field_.order(unit) != 0) throw std::invalid_argument("residual coefficient must be a unit");

  // Standard monomial of value `target` in p, φ_0..φ_{n-1}.
  Poly monomial(Rational(1));
  Rational rest = target;
  for (std::size_t k = n; k-- > 0;) {
    const mpz_class before = k == 0 ? mpz_class(1) : lcms_[k - 1];
    const long ek = mpz_class(lcms_[k] / before).get_si();
    long a = 0;
    for (; a < ek; ++a)
      if (is_integer((rest - gammas_[k] * a) * Rational(before))) break;
    if (a == ek) throw std::logic_error("no standard monomial for the target value");
    rest -= gammas_[k] * a;
    monomial = monomial * phis_[k].pow(static_cast<unsigned>(a));
  }
  if (!is_integer(rest)) throw std::logic_error("monomial exponent of p is not integral");
  monomial *= power_of(field_.prime(), rest.get_num().get_si());

  Poly next = phis_[n].pow(static_cast<unsigned>(e)) - monomial * unit;
  if (perturb_degree) {
    const auto j = static_cast<std::size_t>(*perturb_degree);
    if (static_cast<int>(j) >= next.degree()) throw std::invalid_argument("perturbation degree too large");
    const GroupValue wx = chain()(Poly::monomial(1, j));
    const Rational k = floor_of(target - wx.coord(0)) + 1;
    next += Poly::monomial(power_of(field_.prime(), k.get_num().get_si()), j);
  }
  phis_.push_back(std::move(next));
  lcms_.push_back(lcm(lcms_.back(), mpz_class(gamma.get_den())));
  gammas_.push_back(gamma);
}

InductiveValuation RamifiedTower::chain() const {
  std::vector<Step> steps;
  for (std::size_t k = 1; k < phis_.size(); ++k) steps.emplace_back(OrdinaryStep{phis_[k], GroupValue(gammas_[k])});
  return InductiveValuation(field_, Seed{-phis_[0].coeff(0), GroupValue(gammas_[0])}, std::move(steps));
}

ChainGenerator::ChainGenerator(BaseField field, std::string kind) : field_(field), kind_(std::move(kind)) {
  if (kind_ != "ramified-tower") throw std::invalid_argument("unknown chain generator '" + kind_ + "'");
  if (field_.offset() != 0) throw std::invalid_argument("ramified towers need a rank-one base embedding");
}

Seed ChainGenerator::seed() const { return Seed{Rational(0), GroupValue(Rational(1, 2))}; }

InductiveValuation ChainGenerator::prefix(std::size_t depth) const {
  RamifiedTower tower(field_, Rational(0), Rational(1, 2));
  mpz_class l = 2;
  for (std::size_t n = 0; n < depth; ++n) {
    const Rational gamma = tower.gammas().back() * 2 + Rational(mpz_class(1), l * 2);
    tower.push(gamma, Rational(1));
    l *= 2;
  }
  return tower.chain();
}

InductiveValuation random_chain(std::uint64_t seed, const RandomChainOptions& options) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const long p = options.primes[static_cast<std::size_t>(uniform(0, static_cast<long>(options.primes.size()) - 1))];
  const BaseField field(p);

  const auto depth = static_cast<std::size_t>(uniform(1, static_cast<long>(options.max_depth)));
  // Ramification indices e_0..e_{depth-1}; their product is the top degree.
  std::vector<long> ram;
  long degree = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    long e = uniform(2, 3);
    if (degree * e > options.max_degree) e = 2;
    if (degree * e > options.max_degree) break;
    ram.push_back(e);
    degree *= e;
  }
  auto coprime_numerator = [&](long e) {
    while (true) {
      long c = uniform(1, 2 * e + 1);
      if (std::gcd(c, e) == 1) return c;
    }
  };

  const long e0 = ram.empty() ? 1 : ram[0];
  const Rational alpha(uniform(-p, p));
  const long a0 = coprime_numerator(e0) - e0;
  Rational delta(a0 == 0 ? 1 : a0, e0);
  delta.canonicalize();
  if (mpz_class(delta.get_den()) != e0) delta = Rational(1, e0);
  RamifiedTower tower(field, alpha, delta);
  mpz_class l = e0;
  for (std::size_t n = 0; n < ram.size(); ++n) {
    const long next_e = n + 1 < ram.size() ? ram[n + 1] : uniform(1, 3);
    // The augmentation needs γ > e γ_n, the chain needs γ > γ_n.
    const Rational& top = tower.gammas().back();
    const Rational floor_value = top < 0 ? top : top * ram[n];
    Rational gamma = floor_value + Rational(mpz_class(coprime_numerator(next_e)), l * next_e);
    gamma.canonicalize();
    l *= next_e;
    const Rational unit(uniform(1, p - 1));
    std::optional<std::size_t> perturb;
    if (uniform(0, 1) == 1) perturb = static_cast<std::size_t>(uniform(0, tower.key_polynomials().back().degree() * ram[n] - 1));
    tower.push(gamma, unit, perturb);
  }
  return tower.chain();
}

}  // namespace valchain
