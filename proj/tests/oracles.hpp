#pragma once

// Brute-force reference implementations, written against plain GMP vectors so
// they share no code with the library. Polynomials are coefficient vectors,
// lowest degree first; an empty optional stands for the value infinity.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Val = std::optional<Q>;

inline long vp(Q q, long p) {
  if (q == 0) throw std::invalid_argument("vp(0)");
  mpz_class num = q.get_num(), den = q.get_den();
  long k = 0;
  while (num % p == 0) {
    num /= p;
    ++k;
  }
  while (den % p == 0) {
    den /= p;
    --k;
  }
  return k;
}

inline Val v(const Q& q, long p) { return q == 0 ? Val{} : Val{Q(vp(q, p))}; }

inline Val vmin(const Val& a, const Val& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

inline Val plus(const Val& a, const Q& b) { return a ? Val{*a + b} : Val{}; }

inline Vec trim(Vec f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline Vec sub(Vec a, const Vec& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return trim(a);
}

inline Vec mul(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

/// Schoolbook long division by a monic g.
inline std::pair<Vec, Vec> divmod(Vec f, const Vec& g) {
  f = trim(f);
  const std::size_t dg = g.size() - 1;
  if (f.size() <= dg) return {{}, f};
  Vec q(f.size() - dg);
  for (std::size_t k = f.size(); k-- > dg;) {
    const Q c = f[k];
    q[k - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) f[k - dg + j] -= c * g[j];
  }
  return {trim(q), trim(f)};
}

/// Coefficients of f in base phi by repeated division.
inline std::vector<Vec> expand(Vec f, const Vec& phi) {
  std::vector<Vec> out;
  f = trim(f);
  while (!f.empty()) {
    auto [q, r] = divmod(f, phi);
    out.push_back(r);
    f = q;
  }
  return out;
}

inline Vec linear(const Q& a) { return {Q(-a), Q(1)}; }

struct Ordinary {
  Vec phi;
  Q gamma;
};

/// Rank-one chain of ordinary augmentations of w_{alpha,delta}.
struct Chain {
  long p;
  Q alpha;
  Q delta;
  std::vector<Ordinary> steps;
};

/// The nested min-formula, level = number of steps applied.
inline Val eval(const Chain& w, const Vec& f, std::size_t level) {
  if (trim(f).empty()) return {};
  if (level == 0) {
    const auto cs = expand(f, linear(w.alpha));
    Val best;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (!cs[i].empty()) best = vmin(best, plus(v(cs[i][0], w.p), w.delta * static_cast<long>(i)));
    return best;
  }
  const Ordinary& s = w.steps[level - 1];
  const auto cs = expand(f, s.phi);
  Val best;
  for (std::size_t i = 0; i < cs.size(); ++i)
    best = vmin(best, plus(eval(w, cs[i], level - 1), s.gamma * static_cast<long>(i)));
  return best;
}

inline Val eval(const Chain& w, const Vec& f) { return eval(w, f, w.steps.size()); }

/// w_Q(f) = min w(f_i) + i w(Q).
inline Val truncation(const Chain& w, const Vec& q, const Vec& f) {
  const Val wq = eval(w, q);
  const auto cs = expand(f, q);
  Val best;
  for (std::size_t i = 0; i < cs.size(); ++i) best = vmin(best, plus(eval(w, cs[i]), *wq * static_cast<long>(i)));
  return best;
}

/// Digits of sqrt(7) in Z_3 with leading digit 1, by trying every lift.
inline std::vector<long> sqrt7_digits(std::size_t n) {
  std::vector<long> digits{1};
  mpz_class a = 1, pk = 3;
  while (digits.size() < n) {
    const mpz_class next = pk * 3;
    long found = -1;
    for (long d = 0; d < 3; ++d) {
      const mpz_class c = a + d * pk;
      if ((c * c - 7) % next == 0) found = d;
    }
    if (found < 0) throw std::logic_error("no lift");
    a += found * pk;
    pk = next;
    digits.push_back(found);
  }
  return digits;
}

struct Approximation {
  std::vector<Q> a;      // truncations at the nonzero digits
  std::vector<Q> gamma;  // v(a_{i+1} - a_i)
};

/// Cuts a digit sequence at its nonzero digits: a_i sums the digits up to
/// the i-th nonzero one, γ_i is the position of the next nonzero digit.
inline Approximation cut_digits(const std::vector<long>& digits, long p, std::size_t count) {
  Approximation out;
  mpz_class acc = 0, pk = 1;
  for (std::size_t k = 0; k < digits.size(); ++k, pk *= p) {
    if (digits[k] == 0) continue;
    if (!out.a.empty()) out.gamma.push_back(Q(static_cast<long>(k)));
    if (out.a.size() == count) break;
    acc += digits[k] * pk;
    out.a.push_back(Q(acc));
  }
  if (out.gamma.size() < out.a.size()) throw std::logic_error("not enough digits for the last gamma");
  return out;
}

/// Two-coordinate lexicographic values for the limit-augmented √7 chain.
using Pair = std::pair<Q, Q>;
using PVal = std::optional<Pair>;

inline PVal pmin(const PVal& a, const PVal& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

/// ρ_i(f) = min v(c_k) + k γ_i over the Taylor expansion at a_i, base values
/// in the second coordinate.
inline PVal member_value(const Q& a, const Q& gamma, const Vec& f, long p) {
  const auto cs = expand(f, linear(a));
  PVal best;
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (!cs[k].empty()) best = pmin(best, Pair{Q(0), Q(vp(cs[k][0], p)) + gamma * static_cast<long>(k)});
  return best;
}

/// Stable value by brute force: the value shared by the last ten inspected
/// members, nullopt while they still move.
inline std::optional<PVal> stable_value(const Approximation& fam, std::size_t first, const Vec& f, long p) {
  std::vector<PVal> seen;
  for (std::size_t i = first; i < fam.gamma.size(); ++i) seen.push_back(member_value(fam.a[i], fam.gamma[i], f, p));
  if (seen.size() < 10) return std::nullopt;
  for (std::size_t i = seen.size() - 10; i < seen.size(); ++i)
    if (seen[i] != seen.back()) return std::nullopt;
  return seen.back();
}

inline Vec hasse(const Vec& f, std::size_t b) {
  Vec out;
  for (std::size_t k = b; k < f.size(); ++k) {
    mpz_class c = 1;
    for (std::size_t j = 0; j < b; ++j) c = c * static_cast<long>(k - j) / static_cast<long>(j + 1);
    out.push_back(f[k] * c);
  }
  return trim(out);
}

/// ε(f) = max_b (w(f) - w(∂_b f)) / b.
template <class Eval>
Q epsilon(const Eval& w, const Vec& f) {
  const Q wf = *w(f);
  std::optional<Q> best;
  for (std::size_t b = 1; b < f.size(); ++b) {
    const Vec d = hasse(f, b);
    if (d.empty()) continue;
    const Q e = (wf - *w(d)) / static_cast<long>(b);
    if (!best || *best < e) best = e;
  }
  return *best;
}

inline std::string str(const Val& v) { return v ? v->get_str() : "inf"; }

inline std::string str(const PVal& v) {
  if (!v) return "inf";
  if (v->second == 0) return v->first.get_str();
  return "(" + v->first.get_str() + ", " + v->second.get_str() + ")";
}

}  // namespace oracle
