#include <gtest/gtest.h>

#include <random>

#include "swtwist/qseries.hpp"

using namespace swtwist;

namespace {

ExactSeries random_series(std::mt19937& gen, const Rational& cutoff) {
  std::uniform_int_distribution<long> c(-9, 9), e(0, 40);
  ExactSeries::Terms t;
  for (int i = 0; i < 12; ++i) t[rat(e(gen), 4)] = Rational(c(gen));
  return ExactSeries(std::move(t), cutoff);
}

// Euler: prod(1-q^n) = sum_k (-1)^k q^{k(3k-1)/2}
std::map<long, long> pentagonal(long n_max) {
  std::map<long, long> out;
  for (long k = -n_max; k <= n_max; ++k) {
    long e = k * (3 * k - 1) / 2;
    if (e < n_max) out[e] += (k % 2 == 0) ? 1 : -1;
  }
  return out;
}

}  // namespace

TEST(QExpansion, ArithExamples) {
  Rational h = rat(1, 2), cut(10);
  auto a = ExactSeries::monomial(h, Rational(1), cut);
  EXPECT_EQ((a + a).coeff(h), 2);
  ExactSeries::Terms geo;
  for (int n = 0; n < 10; ++n) geo[Rational(n)] = 1;
  ExactSeries one_minus_q({{Rational(0), Rational(1)}, {Rational(1), Rational(-1)}}, Rational(100));
  ExactSeries prod = one_minus_q * ExactSeries(geo, cut);
  EXPECT_EQ(prod, ExactSeries::one(cut));
  auto s = Rational(2) * ExactSeries::monomial(rat(1, 24), Rational(1), cut);
  EXPECT_EQ(s.coeff(rat(1, 24)), 2);
}

TEST(QExpansion, CutoffPropagation) {
  ExactSeries a({{Rational(1), Rational(1)}}, Rational(5));
  ExactSeries b({{Rational(2), Rational(1)}}, Rational(4));
  EXPECT_EQ((a + b).cutoff(), 4);
  EXPECT_EQ((a * b).cutoff(), 5);  // min(5 + 2, 4 + 1)
  // a zero series still carries its window
  ExactSeries z(Rational(3));
  EXPECT_EQ((z * a).cutoff(), 4);
  EXPECT_NO_THROW((void)(a - a));
}

TEST(QExpansion, RingAxioms) {
  std::mt19937 gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(gen, Rational(12)), b = random_series(gen, Rational(11)),
         c = random_series(gen, Rational(13));
    auto l = (a * b) * c, r = a * (b * c);
    Rational cut = std::min(l.cutoff(), r.cutoff());
    EXPECT_EQ(l.truncate(cut), r.truncate(cut));
    auto d1 = a * (b + c), d2 = a * b + a * c;
    cut = std::min(d1.cutoff(), d2.cutoff());
    EXPECT_EQ(d1.truncate(cut), d2.truncate(cut));
  }
}

TEST(ProductExpansion, EtaPentagonal) {
  for (long n : {6L, 25L, 60L}) {
    auto eta = product_expansion(-1, Rational(0), rat(1, 24), Rational(n));
    ExactSeries::Terms want;
    for (auto [e, c] : pentagonal(n))
      if (c != 0 && rat(1, 24) + e < n) want[rat(1, 24) + e] = c;
    EXPECT_EQ(eta.terms(), want) << "cutoff " << n;
  }
}

TEST(ProductExpansion, DistinctParts) {
  // q(n) by the standard DP over largest part
  const int N = 40;
  std::vector<long> qn(N, 0);
  qn[0] = 1;
  for (int part = 1; part < N; ++part)
    for (int s = N - 1; s >= part; --s) qn[s] += qn[s - part];
  auto f2 = product_expansion(1, Rational(0), rat(1, 24), Rational(N));
  for (int n = 0; n + 1 < N; ++n) EXPECT_EQ(f2.coeff(rat(1, 24) + n), qn[n]) << n;
  EXPECT_EQ(f2.coeff(rat(1, 24)), 1);
}

TEST(ProductExpansion, HalfOffset) {
  auto f1 = product_expansion(-1, rat(1, 2), rat(-1, 48), Rational(3));
  Rational b = rat(-1, 48);
  EXPECT_EQ(f1.coeff(b), 1);
  EXPECT_EQ(f1.coeff(b + rat(1, 2)), -1);
  EXPECT_EQ(f1.coeff(b + 1), 0);
  EXPECT_EQ(f1.coeff(b + rat(3, 2)), -1);
  EXPECT_EQ(f1.coeff(b + 2), 1);
  EXPECT_THROW(product_expansion(1, rat(1, 3), Rational(0), Rational(3)), std::invalid_argument);
}

TEST(Relabel, HalfAndDouble) {
  ExactSeries a({{rat(1, 24), Rational(2)}, {Rational(1), Rational(1)}}, Rational(4));
  auto h = half_tau_relabel(a);
  EXPECT_EQ(h.coeff(rat(1, 48)), 2);
  EXPECT_EQ(h.coeff(rat(1, 2)), 1);
  EXPECT_EQ(h.cutoff(), 2);
  std::mt19937 gen(3);
  auto r = random_series(gen, Rational(9));
  EXPECT_EQ(double_tau_relabel(half_tau_relabel(r)), r);
}

TEST(ShiftTau, Phases) {
  auto s = shift_tau(ExactSeries({{rat(1, 2), Rational(1)}, {Rational(1), Rational(1)}, {rat(1, 24), Rational(1)}},
                                 Rational(2)));
  EXPECT_NEAR(std::abs(s.coeff(rat(1, 2)) - Complex(-1, 0)), 0, 1e-15);
  EXPECT_NEAR(std::abs(s.coeff(Rational(1)) - Complex(1, 0)), 0, 1e-15);
  EXPECT_NEAR(std::abs(s.coeff(rat(1, 24)) - std::polar(1.0, std::numbers::pi / 12)), 0, 1e-15);
  std::mt19937 gen(9);
  auto a = random_series(gen, Rational(11));
  auto twice = shift_tau(shift_tau(a));
  for (const auto& [e, c] : a.terms())
    EXPECT_LT(std::abs(twice.coeff(e) - to_double(c) * unit_phase(2 * e)), 1e-12);
}

TEST(Evaluate, Examples) {
  Complex i(0, 1);
  EXPECT_NEAR(std::abs(evaluate(ExactSeries::one(Rational(5)), 0.3 + 0.7 * i).value - 1.0), 0, 1e-15);
  EXPECT_NEAR(evaluate(ExactSeries::monomial(Rational(1), Rational(1), Rational(5)), i).value.real(),
              std::exp(-2 * std::numbers::pi), 1e-15);
  auto eta = product_expansion(-1, Rational(0), rat(1, 24), Rational(50));
  double want = std::tgamma(0.25) / (2 * std::pow(std::numbers::pi, 0.75));
  auto ev = evaluate(eta, i);
  EXPECT_NEAR(ev.value.real(), want, 1e-8);
  EXPECT_NEAR(ev.value.real(), 0.768225, 1e-6);
  EXPECT_LT(ev.error_bound, 1e-100);
  EXPECT_THROW(evaluate(eta, Complex(0.2, 0.0)), std::domain_error);
  std::mt19937 gen(1);
  auto a = random_series(gen, Rational(10)), b = random_series(gen, Rational(10));
  Complex tau(0.1, 0.4);
  EXPECT_LT(std::abs(evaluate_value(a + b, tau) - evaluate_value(a, tau) - evaluate_value(b, tau)), 1e-12);
}

TEST(Divide, InverseOfEta) {
  auto eta = product_expansion(-1, Rational(0), rat(1, 24), Rational(30));
  auto inv = divide(ExactSeries::one(Rational(30)), eta);
  // 1/prod(1-q^n) counts partitions: 1 1 2 3 5 7 11 15 22 30
  std::vector<long> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (std::size_t n = 0; n < p.size(); ++n) EXPECT_EQ(inv.coeff(rat(-1, 24) + long(n)), p[n]);
  auto back = (inv * eta);
  EXPECT_EQ(back.truncate(Rational(29)), ExactSeries::one(Rational(29)));
}

TEST(Divide, ComplexTerminates) {
  auto eta = to_complex(product_expansion(-1, Rational(0), rat(1, 24), Rational(20)));
  auto inv = divide(ComplexSeries::one(Rational(20)), eta);
  EXPECT_NEAR(inv.coeff(rat(-1, 24) + 9).real(), 30.0, 1e-9);
}
