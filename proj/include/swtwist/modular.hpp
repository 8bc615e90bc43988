#pragma once

#include "characters.hpp"
#include "linalg.hpp"

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace swtwist {

enum class ThetaKind { Theta, G, DTheta, DG };

inline std::string theta_kind_name(ThetaKind k) {
  switch (k) {
    case ThetaKind::Theta: return "Theta";
    case ThetaKind::G: return "G";
    case ThetaKind::DTheta: return "dTheta";
    case ThetaKind::DG: return "dG";
  }
  return "?";
}

inline std::string prefactor_name(Prefactor p) {
  switch (p) {
    case Prefactor::F: return "f/eta";
    case Prefactor::F1: return "f1/eta";
    case Prefactor::F2: return "f2/eta";
  }
  return "?";
}

// tau^{tau_power} * prefactor * theta-part
struct BasisFunction {
  Prefactor prefactor;
  ThetaKind kind;
  ThetaIndex index;
  int tau_power = 0;

  std::string name() const {
    std::string s = prefactor_name(prefactor) + " " + theta_kind_name(kind) + "_{" + to_string(index.j) + "," +
                    to_string(index.k) + "}";
    return tau_power ? "tau " + s : s;
  }
};

// the 9m+3 functions spanning the closure
inline std::vector<BasisFunction> closure_basis(int m) {
  detail::check_m(m);
  const Rational k = rat(2 * m + 1, 2), half = rat(1, 2);
  std::vector<BasisFunction> out = {
      {Prefactor::F1, ThetaKind::G, {Rational(0), k}},
      {Prefactor::F, ThetaKind::Theta, {Rational(0), k}},
      {Prefactor::F2, ThetaKind::Theta, {Rational(m) + half, k}},
  };
  for (int i = 0; i < m; ++i) {
    Rational j(m - i);
    out.push_back({Prefactor::F1, ThetaKind::G, {j, k}});
    out.push_back({Prefactor::F, ThetaKind::Theta, {j, k}});
    out.push_back({Prefactor::F2, ThetaKind::Theta, {j - half, k}});
  }
  for (int tp = 0; tp <= 1; ++tp)
    for (int i = 0; i < m; ++i) {
      Rational j(m - i);
      out.push_back({Prefactor::F1, ThetaKind::DG, {j, k}, tp});
      out.push_back({Prefactor::F, ThetaKind::DTheta, {j, k}, tp});
      out.push_back({Prefactor::F2, ThetaKind::DTheta, {j - half, k}, tp});
    }
  return out;
}

struct SampleGrid {
  std::vector<Complex> points;
  Rational cutoff;

  // 63 points 0.1a + i(0.5 + 0.15b) spread across -2 <= Re <= 2, plus a
  // 22-point band at Im 0.1, 0.15 that separates the tau-weighted members
  static SampleGrid standard(const Rational& cutoff = Rational(400)) {
    SampleGrid g{{}, cutoff};
    for (int a = -20; a <= 20; a += 2)
      for (int b = 0; b <= 2; ++b) g.points.emplace_back(0.1 * a, 0.5 + 0.15 * b);
    for (int a = -5; a <= 5; ++a)
      for (double im : {0.1, 0.15}) g.points.emplace_back(0.1 * a, im);
    return g;
  }
};

inline Complex q_power(const Complex& tau, double r) {
  return std::exp(Complex(0.0, 2.0 * std::numbers::pi * r) * tau);
}

// q^pre prod_{x = offset or 1, x < cutoff} (1 + sign q^x), evaluated directly
inline Complex product_value(int sign, const Rational& offset, const Rational& pre, const Complex& tau,
                             const Rational& cutoff) {
  Complex v = q_power(tau, to_double(pre));
  double c = to_double(cutoff);
  for (double x = offset == 0 ? 1.0 : to_double(offset); x < c; x += 1.0) v *= 1.0 + double(sign) * q_power(tau, x);
  return v;
}

inline Complex eta_value(const Complex& tau, const Rational& cutoff) {
  return product_value(-1, Rational(0), rat(1, 24), tau, cutoff);
}

inline Complex prefactor_value(Prefactor p, const Complex& tau, const Rational& cutoff) {
  Complex num = p == Prefactor::F    ? product_value(1, rat(1, 2), rat(-1, 48), tau, cutoff)
                : p == Prefactor::F1 ? product_value(-1, rat(1, 2), rat(-1, 48), tau, cutoff)
                                     : product_value(1, Rational(0), rat(1, 24), tau, cutoff);
  return num / eta_value(tau, cutoff);
}

// Evaluates theta functions from cached exact series and prefactors from
// truncated products; tracks the worst series tail bound seen.
class ModularEvaluator {
 public:
  explicit ModularEvaluator(Rational cutoff) : cutoff_(std::move(cutoff)) {}

  const Rational& cutoff() const { return cutoff_; }
  double max_error_bound() const { return max_bound_; }

  Complex theta_value(ThetaKind kind, const ThetaIndex& idx, const Complex& tau) {
    auto key = std::make_tuple(static_cast<int>(kind), idx.j, idx.k);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      ExactSeries s = kind == ThetaKind::Theta    ? theta(idx, cutoff_)
                      : kind == ThetaKind::G      ? g_series(idx, cutoff_)
                      : kind == ThetaKind::DTheta ? theta_deriv(idx, cutoff_)
                                                  : g_deriv(idx, cutoff_);
      it = cache_.emplace(key, std::move(s)).first;
    }
    // theta coefficients grow at most linearly in the exponent
    Evaluation e = evaluate(it->second, tau, 4.0 * to_double(cutoff_ * idx.k) + 4.0);
    max_bound_ = std::max(max_bound_, e.error_bound);
    return e.value;
  }

  Complex basis_value(const BasisFunction& b, const Complex& tau) {
    Complex v = prefactor_value(b.prefactor, tau, cutoff_) * theta_value(b.kind, b.index, tau);
    return b.tau_power ? tau * v : v;
  }

 private:
  Rational cutoff_;
  std::map<std::tuple<int, Rational, Rational>, ExactSeries> cache_;
  double max_bound_ = 0.0;
};

// Which S-law to test: the general (4k)-term forms, or the (2k)-term forms
// for k in N + 1/2 that split by the parity of j.
enum class ThetaLaw { General, HalfIntegerBlock };

// Right side of the S-law at tau for Theta_{j,k}(-1/tau) or dTheta_{j,k}(-1/tau).
// The general derivative law carries a factor 1/2: dTheta_{2j',4k} has
// coefficients 2(4kn + j'), twice the dTheta_{j',k} normalization.
inline Complex s_law_rhs(ModularEvaluator& ev, const ThetaIndex& idx, bool deriv, ThetaLaw law, const Complex& tau) {
  const double k = to_double(idx.k), j = to_double(idx.j);
  const Complex root = std::sqrt(Complex(0.0, -1.0) * tau);  // principal branch
  auto phase = [&](long jp) { return std::exp(Complex(0.0, -std::numbers::pi * j * double(jp) / k)); };
  Complex sum(0.0, 0.0);
  if (law == ThetaLaw::General) {
    long top = to_long(num(4 * idx.k));
    if (!is_integer(4 * idx.k)) throw std::domain_error("general S-law needs 4k integral");
    for (long jp = 0; jp < top; ++jp) {
      ThetaIndex t(Rational(2 * jp), 4 * idx.k);
      sum += phase(jp) * ev.theta_value(deriv ? ThetaKind::DTheta : ThetaKind::Theta, t, tau);
    }
    Complex pre = root / std::sqrt(2.0 * k);
    return deriv ? 0.5 * tau * pre * sum : pre * sum;
  }
  if (!is_half_odd(idx.k)) throw std::domain_error("block S-law needs k in N + 1/2");
  const bool integral_j = is_integer(idx.j);
  long top = to_long(num(2 * idx.k)) - 1;
  for (long jp = deriv ? 1 : 0; jp <= top; ++jp) {
    ThetaIndex t(Rational(jp), idx.k);
    ThetaKind kind = integral_j ? (deriv ? ThetaKind::DTheta : ThetaKind::Theta) : (deriv ? ThetaKind::DG : ThetaKind::G);
    sum += phase(jp) * ev.theta_value(kind, t, tau);
  }
  Complex pre = std::sqrt(Complex(0.0, -1.0) * tau / (2.0 * k));
  return deriv ? tau * pre * sum : pre * sum;
}

// max over the grid of |LHS(-1/tau) - RHS(tau)| / max(1, |LHS|)
inline double s_transform_residual(const ThetaIndex& idx, bool deriv, ThetaLaw law, const SampleGrid& grid,
                                   ModularEvaluator& ev) {
  double worst = 0.0;
  for (const Complex& tau : grid.points) {
    Complex lhs = ev.theta_value(deriv ? ThetaKind::DTheta : ThetaKind::Theta, idx, -1.0 / tau);
    Complex rhs = s_law_rhs(ev, idx, deriv, law, tau);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
  }
  return worst;
}

// T-laws for k in N + 1/2: Theta(tau+1) = e^{i pi j^2/2k} G(tau) for integral j,
// e^{i pi j^2/2k} Theta(tau) for half-odd j; same for dTheta.
inline double t_transform_residual(const ThetaIndex& idx, bool deriv, const SampleGrid& grid, ModularEvaluator& ev) {
  if (!is_half_odd(idx.k)) throw std::domain_error("T-law here needs k in N + 1/2");
  Complex ph = unit_phase(idx.j * idx.j / (4 * idx.k));
  bool integral_j = is_integer(idx.j);
  ThetaKind lk = deriv ? ThetaKind::DTheta : ThetaKind::Theta;
  ThetaKind rk = integral_j ? (deriv ? ThetaKind::DG : ThetaKind::G) : lk;
  double worst = 0.0;
  for (const Complex& tau : grid.points) {
    Complex lhs = ev.theta_value(lk, idx, tau + 1.0), rhs = ph * ev.theta_value(rk, idx, tau);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
  }
  return worst;
}

// the theta indices occurring in characters for a given m, j in {0, 1/2, ..., m + 1/2}
inline std::vector<ThetaIndex> character_theta_indices(int m) {
  std::vector<ThetaIndex> out;
  for (int j2 = 0; j2 <= 2 * m + 1; ++j2) out.emplace_back(rat(j2, 2), rat(2 * m + 1, 2));
  return out;
}

using ComplexMatrix = Eigen::MatrixXcd;

inline ComplexMatrix evaluation_matrix(const std::vector<BasisFunction>& basis, const std::vector<Complex>& taus,
                                       ModularEvaluator& ev) {
  ComplexMatrix a(static_cast<Eigen::Index>(taus.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < taus.size(); ++r)
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = ev.basis_value(basis[c], taus[r]);
  return a;
}

inline ComplexMatrix normalize_columns(ComplexMatrix a) {
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    double n = a.col(c).norm();
    if (n > 0) a.col(c) /= n;
  }
  return a;
}

struct RankInfo {
  std::size_t rank = 0;
  double gap = 0.0;  // sigma_rank / sigma_{rank+1}; infinite when rank is full
  std::vector<double> singular_values;
};

// numerical rank: singular values >= sigma_max * rel_tol of the column-normalized matrix
inline RankInfo numerical_rank(const ComplexMatrix& a, double rel_tol = 1e-8) {
  Eigen::BDCSVD<ComplexMatrix> svd(normalize_columns(a));
  RankInfo r;
  const auto& s = svd.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i) r.singular_values.push_back(s(i));
  if (r.singular_values.empty()) return r;
  double cut = r.singular_values.front() * rel_tol;
  while (r.rank < r.singular_values.size() && r.singular_values[r.rank] >= cut) ++r.rank;
  r.gap = r.rank < r.singular_values.size() ? r.singular_values[r.rank - 1] / r.singular_values[r.rank]
                                            : std::numeric_limits<double>::infinity();
  return r;
}

struct ClosureRank {
  int m = 0;
  std::size_t basis_size = 0;
  std::size_t rank = 0;  // rank of the basis evaluations
  std::size_t augmented_rank = 0;  // rank with S- and T-images appended
  double gap = 0.0;  // gap of the augmented matrix at its rank
  double smallest_ratio = 0.0;  // sigma_min / sigma_max of the basis evaluations
  bool well_conditioned = false;  // gap >= 1e3
};

struct ClosureMatrices {
  ComplexMatrix base, s_image, t_image;
};

inline ClosureMatrices closure_matrices(int m, const SampleGrid& grid, ModularEvaluator& ev) {
  auto basis = closure_basis(m);
  std::vector<Complex> s_pts, t_pts;
  for (const Complex& t : grid.points) {
    s_pts.push_back(-1.0 / t);
    t_pts.push_back(t + 1.0);
  }
  return {evaluation_matrix(basis, grid.points, ev), evaluation_matrix(basis, s_pts, ev),
          evaluation_matrix(basis, t_pts, ev)};
}

inline ClosureRank closure_rank(int m, const SampleGrid& grid, ModularEvaluator& ev) {
  ClosureMatrices mats = closure_matrices(m, grid, ev);
  ClosureRank out;
  out.m = m;
  out.basis_size = static_cast<std::size_t>(mats.base.cols());
  if (grid.points.size() < 2 * out.basis_size) throw std::invalid_argument("grid too small for a rank decision");
  RankInfo base = numerical_rank(mats.base);
  out.rank = base.rank;
  out.smallest_ratio = base.singular_values.back() / base.singular_values.front();
  ComplexMatrix aug(mats.base.rows(), 3 * mats.base.cols());
  aug << mats.base, mats.s_image, mats.t_image;
  RankInfo a = numerical_rank(aug);
  out.augmented_rank = a.rank;
  out.gap = a.gap;
  out.well_conditioned = out.gap >= 1e3;
  return out;
}

// relative residual of the least-squares fit of y onto the columns of a
inline double fit_residual(const ComplexMatrix& a, const Eigen::VectorXcd& y) {
  ComplexMatrix an = normalize_columns(a);
  Eigen::VectorXcd x = an.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(y);
  return (an * x - y).norm() / y.norm();
}

struct ClosureFit {
  double s_residual = 0.0;  // worst over basis members
  double t_residual = 0.0;
  double negative_control = 0.0;  // eta alone
};

inline ClosureFit closure_under_S_T(int m, const SampleGrid& grid, ModularEvaluator& ev) {
  ClosureMatrices mats = closure_matrices(m, grid, ev);
  ClosureFit out;
  for (Eigen::Index c = 0; c < mats.base.cols(); ++c) {
    out.s_residual = std::max(out.s_residual, fit_residual(mats.base, mats.s_image.col(c)));
    out.t_residual = std::max(out.t_residual, fit_residual(mats.base, mats.t_image.col(c)));
  }
  Eigen::VectorXcd eta_col(mats.base.rows());
  for (std::size_t r = 0; r < grid.points.size(); ++r)
    eta_col(static_cast<Eigen::Index>(r)) = eta_value(grid.points[r], grid.cutoff);
  out.negative_control = fit_residual(mats.base, eta_col);
  return out;
}

// ---- modular differential equation, exact ----

// exponent vector over the pool G_2, G_4, ..., G_{2K}, G_{2,1}, ..., G_{2K,1}
struct EisensteinMonomial {
  std::vector<int> exps;

  int weight() const {
    int w = 0, half = static_cast<int>(exps.size() / 2);
    for (int i = 0; i < static_cast<int>(exps.size()); ++i) w += exps[i] * 2 * (i % half + 1);
    return w;
  }
  std::string name() const {
    int half = static_cast<int>(exps.size() / 2);
    std::string s;
    for (int i = 0; i < static_cast<int>(exps.size()); ++i) {
      if (exps[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "G" + std::to_string(2 * (i % half + 1)) + (i >= half ? ",1" : "");
      if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
  }
  friend bool operator<(const EisensteinMonomial& a, const EisensteinMonomial& b) { return a.exps < b.exps; }
  friend bool operator==(const EisensteinMonomial& a, const EisensteinMonomial& b) { return a.exps == b.exps; }
};

// all monomials of exactly the given weight over a pool of generators G_2..G_{2K} twice
inline std::vector<EisensteinMonomial> eisenstein_monomials(int weight, int top_k) {
  std::vector<EisensteinMonomial> out;
  std::vector<int> exps(2 * top_k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == exps.size()) {
      if (left == 0) out.push_back({exps});
      return;
    }
    int w = 2 * (static_cast<int>(i) % top_k + 1);
    for (int e = 0; e * w <= left; ++e) {
      exps[i] = e;
      rec(i + 1, left - e * w);
    }
    exps[i] = 0;
  };
  rec(0, weight);
  return out;
}

struct MdeTerm {
  EisensteinMonomial monomial;
  Rational coefficient;
};

struct MdeResult {
  int m = 1;
  int order = 0;
  int q_order = 0;  // equations imposed at exponents e + n, n = 0..q_order
  bool found = false;
  std::size_t unknowns = 0, equations = 0, rank = 0;
  std::vector<std::vector<MdeTerm>> coefficients;  // H_j, j = 0..order-1, nonzero terms
};

namespace detail {

// D^j y with D = q d/dq
inline ExactSeries q_derivative_power(const ExactSeries& y, int j) {
  ExactSeries::Terms t;
  for (const auto& [e, c] : y.terms()) {
    Rational f = c;
    for (int i = 0; i < j; ++i) f *= e;
    t.emplace_hint(t.end(), e, f);
  }
  return ExactSeries(std::move(t), y.cutoff());
}

struct EisensteinPool {
  int top_k;
  Rational cutoff;
  std::vector<ExactSeries> gens;
  std::map<EisensteinMonomial, ExactSeries> cache;

  EisensteinPool(int k, Rational c) : top_k(k), cutoff(std::move(c)) {
    for (auto v : {EisensteinVariant::Full, EisensteinVariant::Level2One})
      for (int i = 1; i <= k; ++i) gens.push_back(eisenstein(static_cast<unsigned>(i), v, cutoff));
  }
  const ExactSeries& series(const EisensteinMonomial& mono) {
    auto it = cache.find(mono);
    if (it != cache.end()) return it->second;
    ExactSeries s = ExactSeries::one(cutoff);
    for (std::size_t i = 0; i < mono.exps.size(); ++i)
      for (int e = 0; e < mono.exps[i]; ++e) s = (s * gens[i]).truncate(cutoff);
    return cache.emplace(mono, std::move(s)).first->second;
  }
};

}  // namespace detail

// D^order y + sum_j H_j D^j y, through exponent cutoff
inline ExactSeries apply_mde(const MdeResult& r, const ExactSeries& y) {
  detail::EisensteinPool pool(r.order, y.cutoff() - y.lower_bound() + 1);
  ExactSeries out = detail::q_derivative_power(y, r.order);
  for (int j = 0; j < r.order; ++j) {
    if (r.coefficients[j].empty()) continue;
    ExactSeries h(pool.cutoff);
    for (const auto& t : r.coefficients[j]) h = h + t.coefficient * pool.series(t.monomial);
    out = out + h * detail::q_derivative_power(y, j);
  }
  return out.truncate(y.cutoff());
}

// Searches for D^{3m+1} + sum_j H_j D^j annihilating the 2m+1 twisted
// characters through exponent e + q_order, H_j of weight 2(3m+1-j) in the
// pool G_{2k}, G_{2k,1}, k <= 3m+1. Exact; free unknowns set to zero.
inline MdeResult find_mde(int m = 1, int q_order = 60) {
  detail::check_m(m);
  MdeResult r;
  r.m = m;
  r.order = 3 * m + 1;
  r.q_order = q_order;
  std::vector<std::pair<int, EisensteinMonomial>> unknowns;
  for (int j = 0; j < r.order; ++j)
    for (auto& mono : eisenstein_monomials(2 * (r.order - j), r.order)) unknowns.emplace_back(j, mono);
  r.unknowns = unknowns.size();
  detail::EisensteinPool pool(r.order, Rational(q_order + 2));

  Matrix<Rational> a;
  std::vector<Rational> b;
  std::vector<ModuleLabel> labels;
  for (int i = 1; i <= m; ++i) labels.push_back({Family::RLambda, i, m});
  for (int i = 1; i <= m + 1; ++i) labels.push_back({Family::RPi, i, m});
  for (const auto& l : labels) {
    // leading exponents (2i+1-2m)^2/(8p) stay below m + 1
    ExactSeries chi = twisted_char(l, Rational(q_order + m + 3));
    Rational e = *chi.min_exponent();
    chi = chi.truncate(e + q_order + 1);
    std::vector<ExactSeries> derivs;
    for (int j = 0; j <= r.order; ++j) derivs.push_back(detail::q_derivative_power(chi, j));
    std::vector<ExactSeries> cols;
    for (const auto& [j, mono] : unknowns) cols.push_back((pool.series(mono) * derivs[j]).truncate(chi.cutoff()));
    for (int n = 0; n <= q_order; ++n) {
      Rational x = e + n;
      std::vector<Rational> row;
      for (const auto& c : cols) row.push_back(c.coeff(x));
      a.push_back(std::move(row));
      b.push_back(-derivs[r.order].coeff(x));
    }
  }
  r.equations = a.size();
  LinearSolve<Rational> sol = solve(a, b);
  r.rank = sol.rank;
  r.found = sol.consistent;
  r.coefficients.assign(r.order, {});
  if (!r.found) return r;
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    if (sol.x[u] != 0) r.coefficients[unknowns[u].first].push_back({unknowns[u].second, sol.x[u]});
  return r;
}

}  // namespace swtwist
