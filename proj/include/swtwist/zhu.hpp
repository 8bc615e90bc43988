#pragma once

#include "characters.hpp"
#include "combinatorics.hpp"
#include "polynomial.hpp"
#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace swtwist {

// Eigenvalues of G(0), L(0), H(0), Hhat(0) on the top of a singlet module
// with parameter t. Square roots are kept as (square, sign):
// g0 = sign * sqrt(g0_sq) = (t - m)/sqrt(2p), h0 = binom(t - 1/2, 2m)/sqrt(2).
struct SingletEigenvalues {
  Rational t;
  int m = 1;
  Rational g0_sq;
  int g0_sign = 0;
  Rational l0;
  Rational h0_sq;
  Rational hhat0;
};

inline SingletEigenvalues singlet_eigen(const Rational& t, int m) {
  detail::check_m(m);
  const Rational p(2 * m + 1);
  SingletEigenvalues e;
  e.t = t;
  e.m = m;
  Rational d = t - m;
  e.g0_sq = d * d / (2 * p);
  e.g0_sign = d > 0 ? 1 : d < 0 ? -1 : 0;
  e.l0 = t * (t - 2 * m) / (2 * p) + rat(1, 16);
  Rational b = binom(t - rat(1, 2), 2 * m);
  e.h0_sq = b * b / 2;
  e.hhat0 = (Rational(m) - t) / p * b;
  return e;
}

// h^{2i+2,1} - c/24 = (2i+1-2m)^2/(8p)
inline Rational shifted_top_weight(int i, int m) {
  Rational d(2 * i + 1 - 2 * m);
  return d * d / (8 * (2 * m + 1));
}

// C_m = 2^{2m-1} p^{2m} / ((2m)!)^2
inline Rational zhu_cm(int m) {
  detail::check_m(m);
  BigInt f = factorial(2 * m);
  BigInt num = BigInt(1) << (2 * m - 1);
  BigInt pp = 1;
  for (int i = 0; i < 2 * m; ++i) pp *= (2 * m + 1);
  return Rational(num * pp) / Rational(f * f);
}

// H(a,b) = b^2 - C_m P(a^2)^2 with P(X) = prod_{i<m} (X - (2i+1-2m)^2/(8p))
struct HabData {
  Rational cm;
  UniPoly inner;  // P, degree m in X = a^2
};

inline HabData hab_polynomial(int m) {
  HabData h{zhu_cm(m), UniPoly::constant(1)};
  for (int i = 0; i < m; ++i) h.inner = h.inner * UniPoly::linear_root(shifted_top_weight(i, m));
  return h;
}

inline Rational hab_value(const HabData& h, const Rational& a_sq, const Rational& b_sq) {
  Rational v = h.inner(a_sq);
  return b_sq - h.cm * v * v;
}

struct FmrData {
  UniPoly poly;
  std::vector<Rational> roots;  // with multiplicity, ascending
};

// f_m(x) = prod_{i=0}^{3m} (x - h^{2i+2,1})
inline FmrData fmr_polynomial(int m) {
  detail::check_m(m);
  FmrData f{UniPoly::constant(1), {}};
  for (int i = 0; i <= 3 * m; ++i) {
    Rational h = weight_rs(2 * i + 2, 1, m);
    f.poly = f.poly * UniPoly::linear_root(h);
    f.roots.push_back(h);
  }
  std::sort(f.roots.begin(), f.roots.end());
  return f;
}

inline Rational zhu_am(int m) {
  Rational a = Rational(binom_int(2 * m, m)) / Rational(binom_int(4 * m + 1, m));
  return m % 2 ? -a : a;
}

inline Rational Fm(const Rational& t, int m) {
  unsigned n = 3 * m + 1;
  return zhu_am(m) * binom(t + m + rat(1, 2), n) * binom(t - rat(1, 2), n);
}

inline Rational binomial_sum_lhs(const Rational& t, int m) {
  Rational s = 0;
  for (int k = 0; k <= 2 * m; ++k) {
    Rational term = Rational(binom_int(2 * m, k)) * binom(t + rat(1, 2), 4 * m + 1 - k) *
                    binom(t - rat(1, 2), 2 * m + 1 + k);
    s += k % 2 ? -term : term;
  }
  return s;
}

inline UniPoly Fm_poly(int m) {
  unsigned n = 3 * m + 1;
  UniPoly t = UniPoly::x();
  return zhu_am(m) * (binom_poly(t + UniPoly::constant(Rational(m) + rat(1, 2)), n) *
                      binom_poly(t - UniPoly::constant(rat(1, 2)), n));
}

inline UniPoly binomial_sum_lhs_poly(int m) {
  UniPoly t = UniPoly::x(), s;
  UniPoly up = t + UniPoly::constant(rat(1, 2)), dn = t - UniPoly::constant(rat(1, 2));
  for (int k = 0; k <= 2 * m; ++k) {
    UniPoly term = Rational(binom_int(2 * m, k)) * (binom_poly(up, 4 * m + 1 - k) * binom_poly(dn, 2 * m + 1 + k));
    s = k % 2 ? s - term : s + term;
  }
  return s;
}

struct TwistedModuleRecord {
  ModuleLabel label;
  Rational lowest_weight;
  int top_dim_graded;
  Rational g0_squared;
  int i_index;
};

// RLambda(i+1) <-> i = 0..m-1; RPi(m+1-j) <-> i = 2m+j, j = 0..m
inline std::vector<TwistedModuleRecord> classify_twisted(int m) {
  detail::check_m(m);
  std::vector<TwistedModuleRecord> out;
  auto record = [&](ModuleLabel l, int i, int dim) {
    out.push_back({l, weight_rs(2 * i + 2, 1, m), dim, shifted_top_weight(i, m), i});
  };
  for (int i = 0; i < m; ++i) record({Family::RLambda, i + 1, m}, i, 2);
  for (int index = 1; index <= m + 1; ++index) record({Family::RPi, index, m}, 3 * m + 1 - index, 4);
  return out;
}

// Eigenvalue polynomials in t.
struct SingletPolys {
  UniPoly l0, g0_sq, h0_sq, hhat0, binom_part, shifted;  // shifted = t - m
};

inline SingletPolys singlet_polys(int m) {
  const Rational p(2 * m + 1);
  UniPoly t = UniPoly::x();
  SingletPolys s;
  s.shifted = t - UniPoly::constant(Rational(m));
  s.l0 = (1 / (2 * p)) * (t * (t - UniPoly::constant(Rational(2 * m)))) + UniPoly::constant(rat(1, 16));
  s.g0_sq = (1 / (2 * p)) * (s.shifted * s.shifted);
  s.binom_part = binom_poly(t - UniPoly::constant(rat(1, 2)), 2 * m);
  s.h0_sq = rat(1, 2) * (s.binom_part * s.binom_part);
  s.hhat0 = (-1 / p) * (s.shifted * s.binom_part);
  return s;
}

// Both closed forms of [H]*[H] as polynomials in X = x^2:
// (1/2) binom(sqrt(2p) x + m - 1/2, 2m)^2 pairs its factors k, 2m-1-k into
// 2p X - (m - 1/2 - k)^2.
inline std::pair<UniPoly, UniPoly> hh_closed_forms(int m, const Rational& cm) {
  const Rational p(2 * m + 1);
  UniPoly paired = UniPoly::constant(1);
  for (int k = 0; k < m; ++k) {
    Rational a = Rational(m - k) - rat(1, 2);
    paired = paired * UniPoly({-a * a, 2 * p});
  }
  Rational f(factorial(2 * m));
  UniPoly binom_form = (1 / (2 * f * f)) * (paired * paired);
  UniPoly inner = hab_polynomial(m).inner;
  return {binom_form, cm * (inner * inner)};
}

// The four relations of the twisted Zhu algebra of the singlet, evaluated on
// top eigenvalues as exact polynomial identities in t. corrupt perturbs C_m
// and is only a test hook.
inline Report relation_suite(int m, bool corrupt = false) {
  detail::check_m(m);
  Report r;
  r.suite = "zhu-relations";
  const Rational p(2 * m + 1);
  const Rational c24 = central_charge(m) / 24;
  const Rational cm = zhu_cm(m) + (corrupt ? 1 : 0);
  SingletPolys s = singlet_polys(m);
  UniPoly prod = UniPoly::constant(1);
  for (int i = 0; i < m; ++i) prod = prod * (s.l0 - UniPoly::constant(weight_rs(2 * i + 2, 1, m)));
  UniPoly l0c = s.l0 - UniPoly::constant(c24);
  std::string tag = " (m=" + std::to_string(m) + ")";

  r.add("tau_squared" + tag, "[tau]^2 = [omega] - c/24", s.g0_sq == l0c);

  bool sq = s.g0_sq * s.h0_sq == (p / 4) * (s.hhat0 * s.hhat0);
  // g0*h0 = -(sqrt(p)/2) hhat0, times sqrt(p), with g0 = +(t-m)/sqrt(2p)
  bool sign = rat(1, 2) * (s.shifted * s.binom_part) == (-p / 2) * s.hhat0;
  r.add("tau_H" + tag, "[tau]*[H] = [H]*[tau] = -(sqrt(p)/2)[Hhat]", sq && sign,
        sq && sign ? "" : (sq ? "sign mismatch" : "squared form mismatch"));

  bool hh = s.h0_sq == cm * (prod * prod);
  auto [binom_form, product_form] = hh_closed_forms(m, cm);
  r.add("H_H" + tag, "[H]*[H] = C_m prod([omega] - h_i)^2", hh);
  r.add("H_H_closed_forms" + tag, "(1/2) binom(sqrt(2p)x + m - 1/2, 2m)^2 = C_m prod(x^2 - r_i)^2",
        binom_form == product_form);

  bool hath = s.hhat0 * s.hhat0 == (4 / p) * cm * (l0c * prod * prod);
  r.add("Hhat_Hhat" + tag, "[Hhat]*[Hhat] = (4/p) C_m ([omega] - c/24) prod([omega] - h_i)^2", hath);
  return r;
}

// sample points for pointwise checks of polynomial identities
inline std::vector<Rational> sample_points(std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(rat(3 * static_cast<long>(k) - 7, 5 + static_cast<long>(k % 3)));
  return out;
}

}  // namespace swtwist
