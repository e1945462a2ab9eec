#include "valchain/sampling.hpp"

namespace valchain {

PolySampler::PolySampler(const BaseField& field, std::uint64_t seed)
    : p_(field.prime()), bound_(field.prime() * field.prime() * field.prime()), rng_(seed) {}

int PolySampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational PolySampler::coefficient() {
  const long num = std::uniform_int_distribution<long>(-bound_, bound_)(rng_);
  Rational q(num, uniform(0, 3) == 0 ? p_ : 1);
  q.canonicalize();
  return q;
}

Rational PolySampler::nonzero_coefficient() {
  Rational q;
  do {
    q = coefficient();
  } while (q == 0);
  return q;
}

Poly PolySampler::poly(int max_degree) { return poly(0, max_degree); }

Poly PolySampler::poly(int min_degree, int max_degree) {
  const int d = uniform(min_degree, max_degree);
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = coefficient();
  c.back() = nonzero_coefficient();
  return Poly(std::move(c));
}

Poly PolySampler::monic(int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coefficient();
  c.back() = 1;
  return Poly(std::move(c));
}

}  // namespace valchain
