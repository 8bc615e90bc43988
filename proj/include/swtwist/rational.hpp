#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swtwist {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Rational rat(long n, long d = 1) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  return Rational(BigInt(n), BigInt(d));
}

inline Rational rat(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  return Rational(n, d);
}

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }
inline bool is_half_odd(const Rational& r) { return den(r) == 2; }

inline BigInt floor_int(const Rational& r) {
  BigInt q = num(r) / den(r);  // truncates toward zero
  if (num(r) < 0 && q * den(r) != num(r)) q -= 1;
  return q;
}

inline BigInt ceil_int(const Rational& r) { return -floor_int(-r); }

// fractional part in [0, 1)
inline Rational frac(const Rational& r) { return r - Rational(floor_int(r)); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline long to_long(const BigInt& n) {
  if (n > BigInt(std::numeric_limits<long>::max()) ||
      n < BigInt(std::numeric_limits<long>::min()))
    throw std::overflow_error("integer does not fit in long");
  return n.convert_to<long>();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

// canonical "num/den", denominator always written
inline std::string to_string(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

inline BigInt parse_bigint(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
  return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
}

// accepts "a", "a/b"
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(s));
  return rat(parse_bigint(s.substr(0, slash)), parse_bigint(s.substr(slash + 1)));
}

}  // namespace swtwist
