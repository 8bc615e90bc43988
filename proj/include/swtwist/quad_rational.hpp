#pragma once

#include "rational.hpp"

#include <cmath>
#include <ostream>

namespace swtwist {

// a + b*sqrt(2) with a, b rational
class QuadRational {
 public:
  QuadRational() = default;
  QuadRational(long a) : a_(a) {}  // NOLINT
  QuadRational(Rational a) : a_(std::move(a)) {}  // NOLINT
  QuadRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadRational sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  QuadRational conj() const { return {a_, -b_}; }
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }

  QuadRational inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt 2)");
    Rational n = norm();
    return {a_ / n, -b_ / n};
  }

  double to_double() const { return swtwist::to_double(a_) + swtwist::to_double(b_) * std::sqrt(2.0); }

  QuadRational operator-() const { return {-a_, -b_}; }
  QuadRational& operator+=(const QuadRational& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QuadRational& operator-=(const QuadRational& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QuadRational& operator*=(const QuadRational& o) {
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    return *this;
  }
  QuadRational& operator/=(const QuadRational& o) { return *this *= o.inverse(); }

  friend QuadRational operator+(QuadRational x, const QuadRational& y) { return x += y; }
  friend QuadRational operator-(QuadRational x, const QuadRational& y) { return x -= y; }
  friend QuadRational operator*(QuadRational x, const QuadRational& y) { return x *= y; }
  friend QuadRational operator/(QuadRational x, const QuadRational& y) { return x /= y; }
  friend bool operator==(const QuadRational& x, const QuadRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadRational& x) {
    return os << to_string(x.a_) << " + " << to_string(x.b_) << "*sqrt2";
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

}  // namespace swtwist
