#pragma once

// Invariant suites behind `swtwist verify`. Each check carries an anchor:
// the statement it tests, in words. `corrupt` perturbs one constant per
// suite so the failure path can be exercised end to end.

#include <sstream>
#include <string>

#include "swtwist/characters.hpp"
#include "swtwist/fermion.hpp"
#include "swtwist/modular.hpp"
#include "swtwist/report.hpp"
#include "swtwist/zhu.hpp"

namespace swtwist {

namespace detail {

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline std::string tag(const std::string& name, int m) { return name + " (m=" + std::to_string(m) + ")"; }

}  // namespace detail

// W(p) characters written directly in theta functions, independent of the
// SW(m) route: Lambda(s) = ((s/p) Theta_{p-s,p} + (1/p) dTheta_{p-s,p}) / eta,
// Pi(s) = ((s/p) Theta_{s,p} - (1/p) dTheta_{s,p}) / eta
inline ExactSeries triplet_closed_form(bool lambda, int s, int p, const Rational& cutoff) {
  Rational c = cutoff + 2;
  ThetaIndex idx(Rational(lambda ? p - s : s), Rational(p));
  ExactSeries top = Rational(s) / p * theta(idx, c) + rat(lambda ? 1 : -1, p) * theta_deriv(idx, c);
  return divide(top, eta(c)).truncate(cutoff);
}

inline Report zhu_suite(int m, bool corrupt = false) {
  detail::check_m(m);
  Report rep{"zhu", {}};
  rep.merge(relation_suite(m, corrupt));

  auto recs = classify_twisted(m);
  rep.add(detail::tag("classification_count", m), "there are exactly 2m+1 irreducible twisted modules",
          recs.size() == std::size_t(2 * m + 1), std::to_string(recs.size()) + " records");

  bool ok = true;
  for (const auto& t : sample_points(6 * m + 3)) ok = ok && binomial_sum_lhs(t, m) == Fm(t, m);
  ok = ok && binomial_sum_lhs_poly(m) == Fm_poly(m);
  rep.add(detail::tag("binomial_identity", m), "the binomial sum equals F_m(t) as a polynomial in t", ok);

  auto f = fmr_polynomial(m);
  ok = true;
  for (const auto& r : recs) ok = ok && f.poly(r.lowest_weight) == 0;
  rep.add(detail::tag("fmr_vanishing", m), "f_m^R vanishes at the lowest weight of every twisted module", ok);
  rep.add(detail::tag("fmr_no_super_sector", m), "f_m^R does not vanish at c/24", f.poly(central_charge(m) / 24) != 0);
  return rep;
}

inline Report fermion_suite(bool corrupt = false) {
  Report rep{"fermion", {}};
  const Rational cut(20);
  bool ok = true;
  std::string detail_msg;
  for (auto& mono : basis_monomials(Sector::Ramond, Rational(8))) {
    auto v = FockVector::basis(Sector::Ramond, mono, cut);
    for (long a = -6; a <= 6 && ok; ++a)
      for (long b = -6; b <= 6 && ok; ++b) {
        FockVector lhs = phi(a, phi(b, v)) + phi(b, phi(a, v));
        FockVector rhs = a + b == 0 ? v : FockVector(Sector::Ramond, cut);
        if (lhs.truncated() || !(lhs == rhs)) {
          ok = false;
          detail_msg = "fails at m=" + std::to_string(a) + " n=" + std::to_string(b);
        }
      }
  }
  rep.add("anticommutators", "{phi(m), phi(n)} = delta_{m+n,0} on the Ramond Fock space, grade <= 8", ok, detail_msg);

  CmnTable table = cmn_table(8);
  if (corrupt) table[1][0] += rat(1, 1000);
  auto w = omega_s();
  auto d = delta_x(w, table);
  FockVector want = QuadRational(rat(1, 16)) * FockVector::vacuum(Sector::NeveuSchwarz, w.cutoff());
  bool first = d.size() == 1 && d.begin()->first == -2 && d.begin()->second == want;
  rep.add("delta_omega", "Delta_x omega_s = (1/16) x^{-2} 1", first);
  rep.add("delta_squared_omega", "Delta_x^2 omega_s = 0, so the exponential stops after one term",
          first && delta_x(d, table).empty());

  rep.merge(cmn_generating_check(16));

  auto dim = graded_dimension_M(Rational(12));
  rep.add("graded_dimension", "the graded dimension of M is 2 f_2(tau)", dim == Rational(2) * frak_f2(Rational(12)));
  return rep;
}

inline Report characters_suite(int m, bool corrupt = false) {
  detail::check_m(m);
  Report rep{"characters", {}};
  const int p = 2 * m + 1;
  const Rational c24 = central_charge(m) / 24;

  bool ok = true;
  std::string msg;
  for (const auto& r : classify_twisted(m)) {
    auto ch = twisted_char(r.label, Rational(12));
    auto lead = ch.min_exponent();
    int want = r.label.family == Family::RLambda ? 2 : 4;
    if (!lead || *lead != r.lowest_weight - c24 || ch.coeff(*lead) != want) {
      ok = false;
      msg += r.label.name() + " ";
    }
  }
  rep.add(detail::tag("leading_coefficients", m),
          "the top level has dimension 2 for RLambda and 4 for RPi, at q^{h-c/24}", ok, msg);

  const Rational cut40(40);
  ok = true;
  for (int i = 0; i < m; ++i) {
    ExactSeries lhs = twisted_char({Family::RLambda, i + 1, m}, cut40) + twisted_char({Family::RPi, m - i, m}, cut40);
    if (corrupt) lhs = lhs + ExactSeries::monomial(*lhs.min_exponent(), Rational(1), cut40);
    ok = ok && lhs == fock_char(i, m, cut40);
    ExactSeries rhs = twisted_char({Family::RPi, i + 1, m}, cut40) + twisted_char({Family::RLambda, m - i, m}, cut40);
    ok = ok && fock_char(m + i, m, cut40) == rhs;
  }
  ok = ok && fock_char(2 * m, m, cut40) == twisted_char({Family::RPi, m + 1, m}, cut40);
  rep.add(detail::tag("fock_additivity", m),
          "V_{L+gamma_i} (x) M splits as RLambda(i+1) + RPi(m-i) at the level of characters", ok);

  ok = true;
  for (int i = 0; i < m; ++i) {
    const int n_max = 8;
    Rational window = std::min(weight_rs(2 * i + 2, 2 * n_max + 1, m) - c24, cut40);
    ExactSeries sum(window);
    for (int n = 0; n <= n_max; ++n) sum = sum + Rational(2 * n + 1) * ramond_irred_char({i, n, m}, window);
    ok = ok && sum == twisted_char({Family::RLambda, i + 1, m}, window);
  }
  rep.add(detail::tag("telescoping", m),
          "RLambda(i+1) = sum_n (2n+1) L(h^{2i+2,2n+1}) as Virasoro characters", ok);

  ok = true;
  for (const auto& l : all_labels(m)) {
    auto ch = module_char(l, Rational(20));
    ok = ok && (l.flavor == Flavor::Character ? has_nonnegative_integer_coefficients(ch) : has_integer_coefficients(ch));
  }
  rep.add(detail::tag("positivity", m),
          "characters have nonnegative integer coefficients, supercharacters integer ones", ok);

  const Rational cut30(30);
  auto t = triplet_char_bridge(m, cut30);
  ok = true;
  for (int s = 1; s <= p; ++s) {
    ok = ok && has_nonnegative_integer_coefficients(t.lambda[s - 1]) &&
         has_nonnegative_integer_coefficients(t.pi[s - 1]);
    ok = ok && t.lambda[s - 1] == triplet_closed_form(true, s, p, cut30).truncate(t.lambda[s - 1].cutoff());
    ok = ok && t.pi[s - 1] == triplet_closed_form(false, s, p, cut30).truncate(t.pi[s - 1].cutoff());
  }
  rep.add(detail::tag("bridge_closed_form", m),
          "the W(2m+1) characters recovered from SW(m) match the theta closed form and are positive", ok);

  const Rational h(15);
  ExactSeries f = frak_f(h + 1), f2 = frak_f2(h + 1);
  auto same = [](const ExactSeries& a, const ExactSeries& b) {
    Rational c = std::min(a.cutoff(), b.cutoff());
    return a.truncate(c) == b.truncate(c);
  };
  ok = true;
  for (int i = 0; i < m; ++i)
    ok = ok && same(twisted_char({Family::RLambda, i + 1, m}, h),
                    Rational(2) * divide(half_tau_relabel(t.lambda[2 * i + 1]), f));
  for (int i = 0; i <= m; ++i) {
    ok = ok && same(twisted_char({Family::RPi, m + 1 - i, m}, h),
                    Rational(2) * divide(half_tau_relabel(t.pi[2 * m - 2 * i]), f));
    ok = ok && same(untwisted_char({Family::SLambda, i + 1, m}, h), divide(half_tau_relabel(t.lambda[2 * i]), f2));
  }
  for (int i = 0; i < m; ++i)
    ok = ok && same(untwisted_char({Family::SPi, m - i, m}, h), divide(half_tau_relabel(t.pi[2 * m - 2 * i - 1]), f2));
  rep.add(detail::tag("bridge_relations", m), "the four tau/2 relations between SW(m) and W(2m+1) characters", ok);

  double dev = bridge_supercharacter_deviation(t, cut30);
  rep.add(detail::tag("bridge_supercharacters", m), "the (tau+1)/2 relations for supercharacters, up to a constant phase",
          dev < 1e-9, "deviation " + detail::str(dev));

  double worst = 0.0;
  for (int i = 1; i <= m + 1; ++i) worst = std::max(worst, super_vs_T({Family::SLambda, i, m}, Rational(20)));
  for (int i = 1; i <= m; ++i) worst = std::max(worst, super_vs_T({Family::SPi, i, m}, Rational(20)));
  rep.add(detail::tag("supercharacter_is_T", m), "chi(tau+1) is a phase times the supercharacter",
          worst < 1e-9, "deviation " + detail::str(worst));
  return rep;
}

// S and T laws for every theta index used in the m characters
inline Report theta_suite(int m, const Rational& cutoff = Rational(400), double tolerance = 1e-9,
                          bool corrupt = false) {
  detail::check_m(m);
  Report rep{"theta", {}};
  SampleGrid grid = SampleGrid::standard(cutoff);
  ModularEvaluator ev(cutoff);
  double s_gen = 0, s_half = 0, t_worst = 0;
  for (const auto& idx : character_theta_indices(m))
    for (bool d : {false, true}) {
      s_half = std::max(s_half, s_transform_residual(idx, d, ThetaLaw::HalfIntegerBlock, grid, ev));
      t_worst = std::max(t_worst, t_transform_residual(idx, d, grid, ev));
      if (!corrupt) {
        s_gen = std::max(s_gen, s_transform_residual(idx, d, ThetaLaw::General, grid, ev));
        continue;
      }
      // the derivative law read without its factor 1/2
      for (const Complex& tau : grid.points) {
        Complex lhs = ev.theta_value(d ? ThetaKind::DTheta : ThetaKind::Theta, idx, -1.0 / tau);
        Complex rhs = (d ? 2.0 : 1.0) * s_law_rhs(ev, idx, d, ThetaLaw::General, tau);
        s_gen = std::max(s_gen, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
    }
  rep.add(detail::tag("theta_S_general", m), "Theta and dTheta at -1/tau through the 4k-term S-laws", s_gen < tolerance,
          "max residual " + detail::str(s_gen));
  rep.add(detail::tag("theta_S_half_integer", m), "the parity-split S-laws for k in N + 1/2", s_half < tolerance,
          "max residual " + detail::str(s_half));
  rep.add(detail::tag("theta_T", m), "tau -> tau+1 exchanges Theta and G up to a phase", t_worst < tolerance,
          "max residual " + detail::str(t_worst));
  rep.add(detail::tag("theta_truncation", m), "the truncated tails are below the tolerance",
          ev.max_error_bound() < tolerance, "tail bound " + detail::str(ev.max_error_bound()));
  return rep;
}

}  // namespace swtwist
