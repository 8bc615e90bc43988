#pragma once

#include "combinatorics.hpp"
#include "qseries.hpp"

namespace swtwist {

// (j, k) indexing Theta_{j,k} and G_{j,k}; j, k half-integers, k > 0
struct ThetaIndex {
  Rational j;
  Rational k;

  ThetaIndex(Rational j_, Rational k_) : j(std::move(j_)), k(std::move(k_)) {
    if (k <= 0) throw std::domain_error("theta index needs k > 0");
    if (den(j) > 2 || den(k) > 2) throw std::domain_error("theta index entries must be half-integers");
  }

  // j reduced into [0, 2k)
  ThetaIndex canonical() const {
    Rational p = 2 * k;
    Rational r = j - p * Rational(floor_int(j / p));
    return {r, k};
  }

  friend bool operator==(const ThetaIndex& a, const ThetaIndex& b) { return a.j == b.j && a.k == b.k; }
};

namespace detail {

// sum_n w(n) q^{(2kn+j)^2/4k}, where w(n) = sign^n * (2kn+j)^deriv; the walk
// leaves the centre in both directions until the exponent reaches cutoff
inline ExactSeries theta_sum(const ThetaIndex& idx, const Rational& cutoff, bool alternating, bool deriv) {
  const Rational two_k = 2 * idx.k, four_k = 4 * idx.k;
  BigInt centre = floor_int(-idx.j / two_k);
  ExactSeries::Terms t;
  auto add = [&](const BigInt& n) {
    Rational x = two_k * Rational(n) + idx.j;
    Rational e = x * x / four_k;
    if (e >= cutoff) return false;
    Rational c = deriv ? x : Rational(1);
    if (alternating && (n % 2 != 0)) c = -c;
    auto [pos, fresh] = t.try_emplace(e, c);
    if (!fresh) pos->second += c;
    return true;
  };
  // 2kn+j <= 0 at the centre and > 0 just above it; |2kn+j| grows on each
  // side, so each walk stops at its first miss
  for (BigInt n = centre + 1; add(n); n += 1) {}
  for (BigInt n = centre; add(n); n -= 1) {}
  return ExactSeries(std::move(t), cutoff);
}

}  // namespace detail

// Theta_{j,k} = sum_n q^{(2kn+j)^2/4k}
inline ExactSeries theta(const ThetaIndex& idx, const Rational& cutoff) {
  return detail::theta_sum(idx, cutoff, false, false);
}

// dTheta_{j,k} = sum_n (2kn+j) q^{(2kn+j)^2/4k}
inline ExactSeries theta_deriv(const ThetaIndex& idx, const Rational& cutoff) {
  return detail::theta_sum(idx, cutoff, false, true);
}

// G_{j,k} = sum_n (-1)^n q^{(2kn+j)^2/4k}
inline ExactSeries g_series(const ThetaIndex& idx, const Rational& cutoff) {
  return detail::theta_sum(idx, cutoff, true, false);
}

inline ExactSeries g_deriv(const ThetaIndex& idx, const Rational& cutoff) {
  return detail::theta_sum(idx, cutoff, true, true);
}

inline ExactSeries eta(const Rational& cutoff) { return product_expansion(-1, Rational(0), rat(1, 24), cutoff); }
inline ExactSeries frak_f(const Rational& cutoff) { return product_expansion(1, rat(1, 2), rat(-1, 48), cutoff); }
inline ExactSeries frak_f1(const Rational& cutoff) { return product_expansion(-1, rat(1, 2), rat(-1, 48), cutoff); }
inline ExactSeries frak_f2(const Rational& cutoff) { return product_expansion(1, Rational(0), rat(1, 24), cutoff); }

enum class EisensteinVariant { Full, Level2One, Level2Zero };

// G_{2k}, G_{2k,1}, G_{2k,0}, via Lambert expansion of 1/(1 -+ q^x)
inline ExactSeries eisenstein(unsigned k, EisensteinVariant v, const Rational& cutoff) {
  if (k < 1) throw std::domain_error("Eisenstein weight index k must be >= 1");
  const unsigned w = 2 * k;
  Rational constant;
  switch (v) {
    case EisensteinVariant::Full: constant = -bernoulli_number(w) / Rational(factorial(w)); break;
    case EisensteinVariant::Level2One: constant = bernoulli_number(w) / Rational(factorial(w)); break;
    case EisensteinVariant::Level2Zero: constant = bernoulli_poly_at(w, rat(1, 2)) / Rational(factorial(w)); break;
  }
  const Rational scale = Rational(2) / Rational(factorial(w - 1));
  const Rational start = v == EisensteinVariant::Level2Zero ? rat(1, 2) : Rational(1);
  ExactSeries::Terms t;
  t.emplace(Rational(0), constant);
  for (Rational x = start; x < cutoff; x += 1) {
    Rational c = scale;
    for (unsigned i = 0; i + 1 < w; ++i) c *= x;
    // x^{w-1} q^x / (1 -+ q^x) = x^{w-1} sum_s (+-1)^{s-1} q^{s x}
    int s = 1;
    for (Rational e = x; e < cutoff; e += x, ++s) {
      Rational term = (v != EisensteinVariant::Full && s % 2 == 0) ? Rational(-c) : c;
      auto [pos, fresh] = t.try_emplace(e, term);
      if (!fresh) pos->second += term;
    }
  }
  return ExactSeries(std::move(t), cutoff);
}

}  // namespace swtwist
