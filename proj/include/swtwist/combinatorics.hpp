#pragma once

#include "rational.hpp"

#include <vector>

namespace swtwist {

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// generalized binomial x(x-1)...(x-n+1)/n!
inline Rational binom(const Rational& x, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= (x - i);
  return r / Rational(factorial(n));
}

inline BigInt binom_int(long n, long k) {
  if (k < 0) return 0;
  Rational r = binom(Rational(n), static_cast<unsigned>(k));
  return num(r);
}

// B_0..B_n with B_1 = -1/2
inline std::vector<Rational> bernoulli_numbers(unsigned n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    Rational s = 0;
    for (unsigned j = 0; j < k; ++j) s += Rational(binom_int(k + 1, j)) * b[j];
    b[k] = -s / (k + 1);
  }
  return b;
}

inline Rational bernoulli_number(unsigned k) { return bernoulli_numbers(k)[k]; }

// B_k(x) = sum_j binom(k, j) B_j x^{k-j}
inline Rational bernoulli_poly_at(unsigned k, const Rational& x) {
  auto b = bernoulli_numbers(k);
  Rational s = 0, xp = 1;
  for (unsigned j = 0; j <= k; ++j) {
    s += Rational(binom_int(k, k - j)) * b[k - j] * xp;
    xp *= x;
  }
  return s;
}

}  // namespace swtwist
