#pragma once

#include "rational.hpp"

#include <initializer_list>
#include <ostream>
#include <vector>

namespace swtwist {

// Dense univariate polynomial, coefficients lowest degree first.
template <class T>
class Polynomial {
 public:
  static constexpr long kZeroDegree = -1;

  Polynomial() = default;
  Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static Polynomial constant(T a) { return Polynomial(std::vector<T>{std::move(a)}); }
  static Polynomial x() { return Polynomial({T(0), T(1)}); }
  // x - r
  static Polynomial linear_root(const T& r) { return Polynomial({-r, T(1)}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  T operator()(const T& x) const {
    T r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Polynomial operator-() const {
    auto c = c_;
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<T> c(std::max(p.c_.size(), q.c_.size()), T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> c(p.c_.size() + q.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) c[i + j] += p.c_[i] * q.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const T& a, const Polynomial& p) {
    auto c = p.c_;
    for (auto& v : c) v = a * v;
    return Polynomial(std::move(c));
  }

  Polynomial pow(unsigned n) const {
    Polynomial r = constant(T(1)), b = *this;
    for (; n; n >>= 1) {
      if (n & 1) r = r * b;
      if (n > 1) b = b * b;
    }
    return r;
  }

  // p(q(x))
  Polynomial compose(const Polynomial& q) const {
    Polynomial r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + constant(*it);
    return r;
  }

  // p(a*x + b)
  Polynomial compose_linear(const T& a, const T& b) const { return compose(Polynomial({b, a})); }

  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.c_.size(); i-- > 0;) {
      if (p.c_[i] == T(0)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << p.c_[i] << ")";
      if (i > 0) os << "*x^" << i;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using UniPoly = Polynomial<Rational>;

// x(x-1)...(x-n+1)/n! evaluated at the polynomial argument p
inline UniPoly binom_poly(const UniPoly& p, unsigned n) {
  UniPoly r = UniPoly::constant(1);
  Rational fact = 1;
  for (unsigned i = 0; i < n; ++i) {
    r = r * (p - UniPoly::constant(Rational(i)));
    fact *= (i + 1);
  }
  return (1 / fact) * r;
}

}  // namespace swtwist
