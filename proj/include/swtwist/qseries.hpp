#pragma once

#include "rational.hpp"

#include <cmath>
#include <complex>
#include <iterator>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace swtwist {

using Complex = std::complex<double>;

// Raised when a truncated result carries no information: its cutoff does not
// exceed the lowest exponent that could appear in it.
struct TruncationError : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {
inline bool is_zero_coef(const Rational& c) { return c == 0; }
inline bool is_zero_coef(const Complex& c) { return c == Complex(0.0, 0.0); }
inline Complex to_complex(const Rational& c) { return {to_double(c), 0.0}; }
inline Complex to_complex(const Complex& c) { return c; }
}  // namespace detail

// Truncated series sum c_r q^r with rational exponents; every exponent below
// cutoff() is exact, nothing at or above it is known.
template <class Coef>
class QExpansion {
 public:
  using Terms = std::map<Rational, Coef>;

  explicit QExpansion(Rational cutoff) : cutoff_(std::move(cutoff)) {}
  QExpansion(Terms terms, Rational cutoff) : terms_(std::move(terms)), cutoff_(std::move(cutoff)) {
    normalize();
  }

  static QExpansion monomial(const Rational& e, Coef c, const Rational& cutoff) {
    Terms t;
    t.emplace(e, std::move(c));
    return QExpansion(std::move(t), cutoff);
  }
  static QExpansion one(const Rational& cutoff) { return monomial(Rational(0), Coef(1), cutoff); }

  const Terms& terms() const { return terms_; }
  const Rational& cutoff() const { return cutoff_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coef coeff(const Rational& e) const {
    if (e >= cutoff_) throw std::out_of_range("coefficient requested at or above cutoff");
    auto it = terms_.find(e);
    return it == terms_.end() ? Coef(0) : it->second;
  }

  std::optional<Rational> min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  // lowest exponent that may carry a nonzero coefficient
  Rational lower_bound() const { return terms_.empty() ? cutoff_ : terms_.begin()->first; }

  QExpansion truncate(const Rational& c) const {
    return QExpansion(terms_, c < cutoff_ ? c : cutoff_);
  }

  QExpansion operator-() const {
    Terms t = terms_;
    for (auto& [e, c] : t) c = -c;
    return QExpansion(std::move(t), cutoff_);
  }

  friend QExpansion operator+(const QExpansion& a, const QExpansion& b) {
    Rational cut = a.cutoff_ < b.cutoff_ ? a.cutoff_ : b.cutoff_;
    check_cut(a, b, cut, std::min(a.lower_bound(), b.lower_bound()));
    Terms t;
    for (auto it = a.terms_.begin(); it != a.terms_.end() && it->first < cut; ++it) t.insert(*it);
    for (auto it = b.terms_.begin(); it != b.terms_.end() && it->first < cut; ++it) {
      auto [pos, fresh] = t.insert(*it);
      if (!fresh) pos->second += it->second;
    }
    return QExpansion(std::move(t), cut);
  }
  friend QExpansion operator-(const QExpansion& a, const QExpansion& b) { return a + (-b); }

  friend QExpansion operator*(const QExpansion& a, const QExpansion& b) {
    Rational cut = std::min(a.cutoff_ + b.lower_bound(), b.cutoff_ + a.lower_bound());
    check_cut(a, b, cut, a.lower_bound() + b.lower_bound());
    Terms t;
    for (const auto& [ea, ca] : a.terms_) {
      if (ea + b.lower_bound() >= cut) break;
      for (const auto& [eb, cb] : b.terms_) {
        Rational e = ea + eb;
        if (e >= cut) break;
        auto [pos, fresh] = t.try_emplace(std::move(e), ca * cb);
        if (!fresh) pos->second += ca * cb;
      }
    }
    return QExpansion(std::move(t), cut);
  }

  friend QExpansion operator*(const Coef& s, const QExpansion& a) {
    Terms t = a.terms_;
    for (auto& [e, c] : t) c = s * c;
    return QExpansion(std::move(t), a.cutoff_);
  }

  // q^s * a
  QExpansion shift_exponent(const Rational& s) const {
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e + s, c);
    return QExpansion(std::move(t), cutoff_ + s);
  }

  // r -> f*r for rational f > 0
  QExpansion scale_exponent(const Rational& f) const {
    if (f <= 0) throw std::domain_error("exponent scale must be positive");
    Terms t;
    for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e * f, c);
    return QExpansion(std::move(t), cutoff_ * f);
  }

  // (q d/dq)^j
  QExpansion q_derivative(unsigned j = 1) const {
    Terms t = terms_;
    for (auto& [e, c] : t)
      for (unsigned i = 0; i < j; ++i) c = c * coef_from(e);
    return QExpansion(std::move(t), cutoff_);
  }

  friend bool operator==(const QExpansion& a, const QExpansion& b) {
    return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const QExpansion& a) {
    for (const auto& [e, c] : a.terms_) os << c << "*q^(" << e << ") + ";
    return os << "O(q^(" << a.cutoff_ << "))";
  }

 private:
  static Coef coef_from(const Rational& r) {
    if constexpr (std::is_same_v<Coef, Complex>) return detail::to_complex(r);
    else return Coef(r);
  }

  static void check_cut(const QExpansion& a, const QExpansion& b, const Rational& cut,
                        const Rational& low) {
    if (!a.empty() && !b.empty() && cut <= low)
      throw TruncationError("result cutoff " + to_string(cut) + " does not exceed lowest exponent " +
                            to_string(low));
  }

  void normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first >= cutoff_ || detail::is_zero_coef(it->second)) it = terms_.erase(it);
      else ++it;
    }
  }

  Terms terms_;
  Rational cutoff_;
};

using ExactSeries = QExpansion<Rational>;
using ComplexSeries = QExpansion<Complex>;

inline ComplexSeries to_complex(const ExactSeries& a) {
  ComplexSeries::Terms t;
  for (const auto& [e, c] : a.terms()) t.emplace_hint(t.end(), e, detail::to_complex(c));
  return ComplexSeries(std::move(t), a.cutoff());
}
inline const ComplexSeries& to_complex(const ComplexSeries& a) { return a; }

// mixed-domain arithmetic promotes to complex
inline ComplexSeries operator+(const ExactSeries& a, const ComplexSeries& b) { return to_complex(a) + b; }
inline ComplexSeries operator+(const ComplexSeries& a, const ExactSeries& b) { return a + to_complex(b); }
inline ComplexSeries operator-(const ExactSeries& a, const ComplexSeries& b) { return to_complex(a) - b; }
inline ComplexSeries operator-(const ComplexSeries& a, const ExactSeries& b) { return a - to_complex(b); }
inline ComplexSeries operator*(const ExactSeries& a, const ComplexSeries& b) { return to_complex(a) * b; }
inline ComplexSeries operator*(const ComplexSeries& a, const ExactSeries& b) { return a * to_complex(b); }

// q^prefactor * prod_n (1 + sign q^{n+offset}); n from 1 when offset = 0, from 0 when offset = 1/2
inline ExactSeries product_expansion(int sign, const Rational& offset, const Rational& prefactor,
                                     const Rational& cutoff) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (offset != 0 && offset != rat(1, 2)) throw std::invalid_argument("offset must be 0 or 1/2");
  if (cutoff <= prefactor) throw std::domain_error("cutoff must exceed the prefactor exponent");
  Rational span = cutoff - prefactor;
  ExactSeries::Terms acc;
  acc.emplace(Rational(0), Rational(1));
  for (Rational a = offset == 0 ? Rational(1) : offset; a < span; a += 1) {
    ExactSeries::Terms next = acc;
    for (const auto& [e0, c0] : acc) {
      Rational e = e0 + a;
      if (e >= span) break;
      Rational c = sign * c0;
      auto [pos, fresh] = next.try_emplace(std::move(e), c);
      if (!fresh) pos->second += c;
    }
    acc = std::move(next);
  }
  return ExactSeries(std::move(acc), span).shift_exponent(prefactor);
}

// exponents r -> r/2 (tau -> tau/2)
template <class Coef>
QExpansion<Coef> half_tau_relabel(const QExpansion<Coef>& a) {
  return a.scale_exponent(rat(1, 2));
}

// exponents r -> 2r (tau -> 2 tau), inverse of half_tau_relabel
template <class Coef>
QExpansion<Coef> double_tau_relabel(const QExpansion<Coef>& a) {
  return a.scale_exponent(Rational(2));
}

// e^{2 pi i r}, reducing r mod 1 exactly first
inline Complex unit_phase(const Rational& r) {
  double x = 2.0 * std::numbers::pi * to_double(frac(r));
  return {std::cos(x), std::sin(x)};
}

// tau -> tau + 1: coefficient at q^r picks up e^{2 pi i r}
template <class Coef>
ComplexSeries shift_tau(const QExpansion<Coef>& a) {
  ComplexSeries::Terms t;
  for (const auto& [e, c] : a.terms()) t.emplace_hint(t.end(), e, detail::to_complex(c) * unit_phase(e));
  return ComplexSeries(std::move(t), a.cutoff());
}

// Long division a/b. b must have a nonzero leading term.
template <class Coef>
QExpansion<Coef> divide(const QExpansion<Coef>& a, const QExpansion<Coef>& b) {
  if (b.empty()) throw std::domain_error("division by a series with no known terms");
  const Rational eb = b.terms().begin()->first;
  const Coef lead = b.terms().begin()->second;
  Rational cut = std::min(a.cutoff(), b.cutoff() + a.lower_bound() - eb) - eb;
  if (!a.empty() && cut <= a.lower_bound() - eb)
    throw TruncationError("quotient cutoff does not exceed its lowest exponent");
  typename QExpansion<Coef>::Terms rem(a.terms());
  typename QExpansion<Coef>::Terms quo;
  while (!rem.empty()) {
    auto it = rem.begin();
    Rational e = it->first - eb;
    if (e >= cut) break;
    Coef c = it->second / lead;
    quo.emplace_hint(quo.end(), e, c);
    rem.erase(it);
    for (auto bt = std::next(b.terms().begin()); bt != b.terms().end(); ++bt) {
      Rational x = e + bt->first;
      if (x - eb >= cut) break;
      auto [pos, fresh] = rem.try_emplace(x, Coef(0) - c * bt->second);
      if (!fresh) pos->second -= c * bt->second;
      if (detail::is_zero_coef(pos->second)) rem.erase(pos);
    }
  }
  return QExpansion<Coef>(std::move(quo), cut);
}

struct Evaluation {
  Complex value;
  double error_bound;
};

// sum c_r exp(2 pi i r tau); the bound is |q|^cutoff/(1-|q|) times growth_bound
template <class Coef>
Evaluation evaluate(const QExpansion<Coef>& a, Complex tau, double growth_bound = 18446744073709551616.0) {
  if (!(tau.imag() > 0)) throw std::domain_error("evaluation needs Im(tau) > 0");
  const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);
  Complex s(0.0, 0.0);
  for (const auto& [e, c] : a.terms()) s += detail::to_complex(c) * std::exp(two_pi_i * to_double(e) * tau);
  double aq = std::exp(-2.0 * std::numbers::pi * tau.imag());
  double bound = std::pow(aq, to_double(a.cutoff())) / (1.0 - aq) * growth_bound;
  return {s, bound};
}

template <class Coef>
Complex evaluate_value(const QExpansion<Coef>& a, Complex tau) {
  return evaluate(a, tau).value;
}

}  // namespace swtwist
