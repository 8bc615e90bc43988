#include <gtest/gtest.h>

#include <random>
#include <set>

#include "swtwist/zhu.hpp"

using namespace swtwist;

namespace {

std::vector<Rational> random_ts(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> nd(-90, 90), dd(1, 13);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rat(nd(gen), dd(gen)));
  return out;
}

}  // namespace

TEST(SingletEigen, Examples) {
  for (int m = 1; m <= 4; ++m) {
    auto e = singlet_eigen(Rational(m), m);
    EXPECT_EQ(e.g0_sq, 0);
    EXPECT_EQ(e.g0_sign, 0);
    EXPECT_EQ(e.l0 - central_charge(m) / 24, 0);
  }
  auto e = singlet_eigen(Rational(0), 1);
  EXPECT_EQ(e.l0, rat(1, 16));
  EXPECT_EQ(e.h0_sq, rat(9, 128));
  EXPECT_EQ(e.g0_sign, -1);
  EXPECT_EQ(singlet_eigen(Rational(3), 1).hhat0, rat(-5, 4));
}

TEST(SingletEigen, SquareInvariants) {
  for (int m = 1; m <= 3; ++m)
    for (const auto& t : random_ts(15, 4 + m)) {
      auto e = singlet_eigen(t, m);
      EXPECT_EQ(e.g0_sq, e.l0 - central_charge(m) / 24);
      Rational b = binom(t - rat(1, 2), 2 * m);
      EXPECT_EQ(e.h0_sq, b * b / 2);
    }
}

TEST(Hab, ConstantsAndRoots) {
  EXPECT_EQ(zhu_cm(1), rat(9, 2));
  EXPECT_EQ(zhu_cm(2), rat(625, 72));  // 2^3 5^4 / 24^2
  auto h = hab_polynomial(1);
  EXPECT_EQ(h.inner.degree(), 1);
  EXPECT_EQ(h.inner(rat(1, 24)), 0);
  EXPECT_EQ(hab_polynomial(3).inner.degree(), 3);
}

TEST(Hab, VanishesOnEigenvalues) {
  for (int m = 1; m <= 3; ++m) {
    auto h = hab_polynomial(m);
    for (const auto& t : random_ts(20, 100 + m)) {
      auto e = singlet_eigen(t, m);
      EXPECT_EQ(hab_value(h, e.g0_sq, e.h0_sq), 0) << "m=" << m << " t=" << t;
    }
    auto e = singlet_eigen(rat(1, 3), m);
    EXPECT_NE(hab_value(h, e.g0_sq, e.h0_sq + 1), 0);
  }
}

TEST(Fmr, RootsAndDegree) {
  auto f = fmr_polynomial(1);
  std::vector<Rational> want = {rat(-1, 16), rat(-1, 16), rat(13, 48), rat(15, 16)};
  EXPECT_EQ(f.roots, want);
  EXPECT_EQ(f.poly.degree(), 4);
  EXPECT_EQ(f.poly.leading(), 1);
  for (int m = 1; m <= 5; ++m) {
    auto g = fmr_polynomial(m);
    EXPECT_EQ(g.poly.degree(), 3 * m + 1);
    EXPECT_NE(g.poly(central_charge(m) / 24), 0) << m;
    // square structure: i and 2m-1-i give the same weight for i < m
    for (int i = 0; i < m; ++i) EXPECT_EQ(weight_rs(2 * i + 2, 1, m), weight_rs(2 * (2 * m - 1 - i) + 2, 1, m));
  }
}

TEST(Fm, ConstantsAndZeros) {
  EXPECT_EQ(zhu_am(1), rat(-2, 5));
  EXPECT_EQ(zhu_am(2), rat(6, 36));  // binom(4,2)/binom(9,2)
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(Fm(rat(1, 2), m), 0);
}

TEST(Fm, BinomialIdentityPointwise) {
  for (int m = 1; m <= 4; ++m)
    for (const auto& t : sample_points(6 * m + 3)) EXPECT_EQ(binomial_sum_lhs(t, m), Fm(t, m)) << m << " " << t;
}

TEST(Fm, BinomialIdentityAsPolynomials) {
  for (int m = 1; m <= 4; ++m) {
    auto lhs = binomial_sum_lhs_poly(m);
    EXPECT_EQ(lhs.degree(), 6 * m + 2);
    EXPECT_EQ(lhs, Fm_poly(m));
  }
}

TEST(Fm, RootWeightsExhaustFmr) {
  for (int m = 1; m <= 4; ++m) {
    std::set<Rational> from_f, fmr;
    for (int j = 0; j <= 3 * m; ++j) {
      for (Rational t : {Rational(j) + rat(1, 2), Rational(j - m) - rat(1, 2)}) {
        ASSERT_EQ(Fm(t, m), 0);
        from_f.insert(singlet_eigen(t, m).l0);
      }
    }
    for (const auto& r : fmr_polynomial(m).roots) fmr.insert(r);
    EXPECT_EQ(from_f, fmr) << m;
  }
}

TEST(Classify, M1Table) {
  auto recs = classify_twisted(1);
  ASSERT_EQ(recs.size(), 3u);
  std::set<Rational> weights;
  for (const auto& r : recs) weights.insert(r.lowest_weight);
  EXPECT_EQ(weights, (std::set<Rational>{rat(-1, 16), rat(13, 48), rat(15, 16)}));
  EXPECT_EQ(recs[0].label.family, Family::RLambda);
  EXPECT_EQ(recs[0].top_dim_graded, 2);
  EXPECT_EQ(recs[1].label.index, 1);
  EXPECT_EQ(recs[1].i_index, 3);
  EXPECT_EQ(recs[1].lowest_weight, rat(15, 16));
  EXPECT_EQ(recs[2].i_index, 2);
  EXPECT_EQ(recs[2].top_dim_graded, 4);
}

TEST(Classify, CountsRootsUniqueness) {
  for (int m = 1; m <= 5; ++m) {
    auto recs = classify_twisted(m);
    EXPECT_EQ(recs.size(), std::size_t(2 * m + 1));
    auto f = fmr_polynomial(m);
    std::set<std::pair<Rational, int>> seen;
    for (const auto& r : recs) {
      EXPECT_EQ(f.poly(r.lowest_weight), 0);
      EXPECT_EQ(r.g0_squared, r.lowest_weight - central_charge(m) / 24);
      EXPECT_TRUE(seen.insert({r.lowest_weight, r.top_dim_graded}).second);
      bool in_range = (r.i_index >= 0 && r.i_index < m) || (r.i_index >= 2 * m && r.i_index <= 3 * m);
      EXPECT_TRUE(in_range);
    }
  }
}

TEST(Classify, MatchesCharacterLeadingExponent) {
  for (int m = 1; m <= 3; ++m)
    for (const auto& r : classify_twisted(m)) {
      auto ch = twisted_char(r.label, Rational(12));
      EXPECT_EQ(ch.min_exponent().value(), r.lowest_weight - central_charge(m) / 24);
      EXPECT_EQ(ch.coeff(*ch.min_exponent()), r.top_dim_graded);
    }
}

TEST(RelationSuite, AllPass) {
  for (int m = 1; m <= 4; ++m) {
    auto rep = relation_suite(m);
    EXPECT_EQ(rep.checks.size(), 5u);
    EXPECT_TRUE(rep.all_passed()) << m;
  }
}

TEST(RelationSuite, PointwiseRoute) {
  // same relations through singlet_eigen values instead of polynomials
  for (int m = 1; m <= 4; ++m) {
    const Rational p(2 * m + 1), cm = zhu_cm(m), c24 = central_charge(m) / 24;
    for (const auto& t : random_ts(10, 50 + m)) {
      auto e = singlet_eigen(t, m);
      Rational prod = 1;
      for (int i = 0; i < m; ++i) prod *= e.l0 - weight_rs(2 * i + 2, 1, m);
      EXPECT_EQ(e.h0_sq, cm * prod * prod);
      EXPECT_EQ(e.hhat0 * e.hhat0, 4 / p * cm * (e.l0 - c24) * prod * prod);
      EXPECT_EQ(e.g0_sq * e.h0_sq, p / 4 * e.hhat0 * e.hhat0);
    }
  }
}

TEST(RelationSuite, CorruptedConstantFails) {
  auto rep = relation_suite(2, true);
  EXPECT_FALSE(rep.all_passed());
  auto failed = rep.failed_names();
  EXPECT_NE(std::find(failed.begin(), failed.end(), "H_H (m=2)"), failed.end());
}
