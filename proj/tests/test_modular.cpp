#include <gtest/gtest.h>

#include "swtwist/modular.hpp"

using namespace swtwist;

namespace {

// shared evaluator on the standard grid; the series caches are reused
struct Fixture {
  SampleGrid grid = SampleGrid::standard();
  ModularEvaluator ev{grid.cutoff};
};

Fixture& shared() {
  static Fixture f;
  return f;
}

}  // namespace

TEST(Basis, SizeAndShape) {
  for (int m = 1; m <= 4; ++m) {
    auto b = closure_basis(m);
    EXPECT_EQ(b.size(), std::size_t(9 * m + 3));
    int tau_weighted = 0, derivs = 0;
    for (const auto& f : b) {
      tau_weighted += f.tau_power;
      derivs += (f.kind == ThetaKind::DTheta || f.kind == ThetaKind::DG);
    }
    EXPECT_EQ(tau_weighted, 3 * m);
    EXPECT_EQ(derivs, 6 * m);
  }
  EXPECT_EQ(closure_basis(1)[0].name(), "f1/eta G_{0/1,3/2}");
}

TEST(Grid, Standard) {
  auto g = SampleGrid::standard();
  EXPECT_EQ(g.points.size(), 85u);
  EXPECT_GE(g.points.size(), std::size_t(2 * (9 * 2 + 3)));
  bool off_axis = false;
  for (const auto& t : g.points) {
    EXPECT_GT(t.imag(), 0.0);
    off_axis = off_axis || t.real() != 0.0;
  }
  EXPECT_TRUE(off_axis);
}

TEST(Products, EtaAtI) {
  Complex v = eta_value(Complex(0, 1), Rational(60));
  EXPECT_NEAR(v.real(), std::tgamma(0.25) / (2 * std::pow(std::numbers::pi, 0.75)), 1e-14);
}

TEST(Products, TSwapsFAndF1) {
  // f(tau+1) = e^{-i pi/24} f1(tau), eta(tau+1) = e^{i pi/12} eta(tau)
  Rational c(200);
  for (const auto& tau : shared().grid.points) {
    Complex lhs = prefactor_value(Prefactor::F, tau + 1.0, c);
    Complex rhs = std::exp(Complex(0, -std::numbers::pi / 24 - std::numbers::pi / 12)) *
                  prefactor_value(Prefactor::F1, tau, c);
    EXPECT_LT(std::abs(lhs - rhs) / std::abs(rhs), 1e-10);
  }
}

TEST(ThetaLaws, ExampleHalfIndex) {
  auto& f = shared();
  SampleGrid axis{{Complex(0, 0.8), Complex(0, 1.0), Complex(0, 1.25)}, f.grid.cutoff};
  ThetaIndex idx(rat(1, 2), rat(3, 2));
  EXPECT_LT(s_transform_residual(idx, false, ThetaLaw::HalfIntegerBlock, axis, f.ev), 1e-9);
  EXPECT_LT(s_transform_residual(idx, true, ThetaLaw::HalfIntegerBlock, axis, f.ev), 1e-9);
  // S-fixed point: both sides evaluated at i
  Complex i(0, 1);
  Complex lhs = f.ev.theta_value(ThetaKind::Theta, idx, -1.0 / i);
  EXPECT_LT(std::abs(lhs - s_law_rhs(f.ev, idx, false, ThetaLaw::General, i)), 1e-12);
}

TEST(ThetaLaws, AllCharacterIndices) {
  auto& f = shared();
  for (int m = 1; m <= 2; ++m)
    for (const auto& idx : character_theta_indices(m))
      for (bool d : {false, true}) {
        EXPECT_LT(s_transform_residual(idx, d, ThetaLaw::General, f.grid, f.ev), 1e-9) << m << " " << idx.j << d;
        EXPECT_LT(s_transform_residual(idx, d, ThetaLaw::HalfIntegerBlock, f.grid, f.ev), 1e-9);
        EXPECT_LT(t_transform_residual(idx, d, f.grid, f.ev), 1e-9);
      }
  EXPECT_LT(f.ev.max_error_bound(), 1e-12);
}

TEST(ThetaLaws, DerivativeLawWithoutHalfFails) {
  // the general derivative law read without the factor 1/2 is off by 2x
  auto& f = shared();
  ThetaIndex idx(rat(1, 2), rat(3, 2));
  Complex tau(0.2, 0.9);
  Complex lhs = f.ev.theta_value(ThetaKind::DTheta, idx, -1.0 / tau);
  Complex rhs = s_law_rhs(f.ev, idx, true, ThetaLaw::General, tau);
  EXPECT_LT(std::abs(lhs - rhs), 1e-12);
  EXPECT_GT(std::abs(lhs - 2.0 * rhs), 1e-3);
}

TEST(ThetaLaws, ConvergesWithCutoff) {
  // at these cutoffs the tail dominates, so the residual must shrink
  auto grid = shared().grid;
  for (const auto& idx : character_theta_indices(1)) {
    ModularEvaluator lo(Rational(4)), hi(Rational(16));
    double r_lo = s_transform_residual(idx, false, ThetaLaw::General, grid, lo);
    double r_hi = s_transform_residual(idx, false, ThetaLaw::General, grid, hi);
    EXPECT_LT(r_hi, r_lo / 10) << idx.j;
  }
}

TEST(Closure, RankM1M2) {
  auto& f = shared();
  for (int m = 1; m <= 2; ++m) {
    auto r = closure_rank(m, f.grid, f.ev);
    EXPECT_EQ(r.rank, std::size_t(9 * m + 3));
    EXPECT_EQ(r.augmented_rank, std::size_t(9 * m + 3));
    EXPECT_GT(r.gap, 1e6);
    EXPECT_TRUE(r.well_conditioned);
  }
}

TEST(Closure, DuplicateColumnKeepsRank) {
  auto& f = shared();
  auto basis = closure_basis(1);
  basis.push_back(basis[4]);
  auto a = evaluation_matrix(basis, f.grid.points, f.ev);
  EXPECT_EQ(numerical_rank(a).rank, 12u);
}

TEST(Closure, FitsAndNegativeControl) {
  auto& f = shared();
  for (int m = 1; m <= 2; ++m) {
    auto fit = closure_under_S_T(m, f.grid, f.ev);
    EXPECT_LT(fit.s_residual, 1e-6);
    EXPECT_LT(fit.t_residual, 1e-8);
    EXPECT_GT(fit.negative_control, 1e-2);
  }
}

TEST(Mde, Monomials) {
  // weight 8 over G2..G8 and G2,1..G8,1
  EXPECT_EQ(eisenstein_monomials(8, 4).size(), 20u);
  EXPECT_EQ(eisenstein_monomials(2, 4).size(), 2u);
  EXPECT_EQ(eisenstein_monomials(4, 4).size(), 5u);
  for (const auto& mono : eisenstein_monomials(6, 4)) EXPECT_EQ(mono.weight(), 6);
}

TEST(Mde, M1AnnihilatesTwistedCharacters) {
  auto r = find_mde(1, 60);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.order, 4);
  EXPECT_EQ(r.unknowns, 37u);
  EXPECT_EQ(r.equations, 183u);
  bool nontrivial = false;
  for (const auto& h : r.coefficients) nontrivial = nontrivial || !h.empty();
  EXPECT_TRUE(nontrivial);
  for (const ModuleLabel& l : {ModuleLabel{Family::RLambda, 1, 1}, ModuleLabel{Family::RPi, 1, 1},
                               ModuleLabel{Family::RPi, 2, 1}}) {
    auto chi = twisted_char(l, Rational(64));
    chi = chi.truncate(*chi.min_exponent() + 61);
    auto out = apply_mde(r, chi);
    EXPECT_TRUE(out.empty()) << l.name() << " leaves " << out.size() << " terms";
  }
  auto e = eta(rat(1, 24) + 61);
  EXPECT_FALSE(apply_mde(r, e).empty());
}
