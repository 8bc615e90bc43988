#pragma once

#include "specialfn.hpp"

#include <string>
#include <vector>

namespace swtwist {

enum class Family { RLambda, RPi, SLambda, SPi };
enum class Flavor { Character, Supercharacter };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::RLambda: return "RLambda";
    case Family::RPi: return "RPi";
    case Family::SLambda: return "SLambda";
    case Family::SPi: return "SPi";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "RLambda") return Family::RLambda;
  if (s == "RPi") return Family::RPi;
  if (s == "SLambda") return Family::SLambda;
  if (s == "SPi") return Family::SPi;
  throw std::invalid_argument("unknown module family: " + s);
}

inline bool is_twisted(Family f) { return f == Family::RLambda || f == Family::RPi; }

struct ModuleLabel {
  Family family;
  int index;
  int m;
  Flavor flavor = Flavor::Character;

  void validate() const {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    int hi = (family == Family::RLambda || family == Family::SPi) ? m : m + 1;
    if (index < 1 || index > hi)
      throw std::invalid_argument(family_name(family) + " index " + std::to_string(index) + " outside [1, " +
                                  std::to_string(hi) + "]");
    if (flavor == Flavor::Supercharacter && is_twisted(family))
      throw std::invalid_argument("supercharacters exist only for SLambda and SPi");
  }

  std::string name() const {
    std::string s = family_name(family) + "(" + std::to_string(index) + ")";
    return flavor == Flavor::Supercharacter ? s + "^F" : s;
  }
};

// labels h^{2i+2, 2n+1}; n may be negative
struct RamondHWLabel {
  int i;
  int n;
  int m;
  int s() const { return 2 * n + 1; }
};

inline Rational central_charge(int m) { return rat(3, 2) - Rational(12 * m * m) / (2 * m + 1); }

// h^{r,s} = ((r - s(2m+1))^2 - 4m^2)/(8(2m+1)) + 1/16
inline Rational weight_rs(long r, long s, int m) {
  long p = 2 * m + 1;
  Rational d = Rational(r - s * p);
  return (d * d - 4 * m * m) / (8 * p) + rat(1, 16);
}

inline Rational conformal_weight(const RamondHWLabel& l) { return weight_rs(2 * l.i + 2, l.s(), l.m); }

// 1/eta times f, f1 or f2
enum class Prefactor { F, F1, F2 };

inline ExactSeries prefactor_series(Prefactor p, const Rational& cutoff) {
  Rational c = cutoff + 1;
  ExactSeries num = p == Prefactor::F ? frak_f(c) : p == Prefactor::F1 ? frak_f1(c) : frak_f2(c);
  return divide(num, eta(c)).truncate(cutoff);
}

namespace detail {

inline void check_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
}

// pre * (a*T + b*dT) for T = Theta or G at index (j, (2m+1)/2)
inline ExactSeries theta_combo(Prefactor pre, bool g, const Rational& j, int m, const Rational& a,
                               const Rational& b, const Rational& cutoff) {
  ThetaIndex idx(j, rat(2 * m + 1, 2));
  Rational c = cutoff + 1;
  ExactSeries t = g ? g_series(idx, c) : theta(idx, c);
  ExactSeries part = a * t;
  if (b != 0) part = part + b * (g ? g_deriv(idx, c) : theta_deriv(idx, c));
  return (prefactor_series(pre, c) * part).truncate(cutoff);
}

}  // namespace detail

// graded characters of the twisted modules RLambda(1..m), RPi(1..m+1);
// split = true gives one parity half
inline ExactSeries twisted_char(const ModuleLabel& l, const Rational& cutoff, bool split = false) {
  l.validate();
  if (!is_twisted(l.family)) throw std::invalid_argument("twisted_char needs RLambda or RPi");
  const int m = l.m;
  const Rational p(2 * m + 1);
  ExactSeries r(cutoff);
  if (l.family == Family::RLambda) {
    int i = l.index - 1;
    r = detail::theta_combo(Prefactor::F2, false, Rational(m - i) - rat(1, 2), m, Rational(2 * i + 2) / p,
                            2 / p, cutoff);
  } else if (l.index == m + 1) {
    r = detail::theta_combo(Prefactor::F2, false, Rational(m) + rat(1, 2), m, Rational(1), Rational(0), cutoff);
  } else {
    int i = m - l.index;
    r = detail::theta_combo(Prefactor::F2, false, Rational(m - i) - rat(1, 2), m, Rational(2 * m - 2 * i - 1) / p,
                            -2 / p, cutoff);
  }
  return (split ? Rational(1) : Rational(2)) * r;
}

// characters and supercharacters of SLambda(1..m+1), SPi(1..m)
inline ExactSeries untwisted_char(const ModuleLabel& l, const Rational& cutoff) {
  l.validate();
  if (is_twisted(l.family)) throw std::invalid_argument("untwisted_char needs SLambda or SPi");
  const int m = l.m;
  const Rational p(2 * m + 1);
  const bool super = l.flavor == Flavor::Supercharacter;
  const Prefactor pre = super ? Prefactor::F1 : Prefactor::F;
  if (l.family == Family::SLambda && l.index == m + 1)
    return detail::theta_combo(pre, super, Rational(0), m, Rational(1), Rational(0), cutoff);
  if (l.family == Family::SLambda) {
    int i = l.index - 1;
    return detail::theta_combo(pre, super, Rational(m - i), m, Rational(2 * i + 1) / p, 2 / p, cutoff);
  }
  int i = m - l.index;
  return detail::theta_combo(pre, super, Rational(m - i), m, Rational(2 * m - 2 * i) / p, -2 / p, cutoff);
}

inline ExactSeries module_char(const ModuleLabel& l, const Rational& cutoff) {
  return is_twisted(l.family) ? twisted_char(l, cutoff) : untwisted_char(l, cutoff);
}

// Second index of the weight subtracted in the irreducible Ramond character
// with highest weight h^{2i+2,s}. For 2i+2 < 2m+1 the singular-vector chain
// gives -s when s > 0 and 2-s when s < 0; for i in [m, 2m-1] the label
// (i, s) has the same weights as (2m-1-i, 2-s); for i = 2m the weight depends
// on |2-s| only and the next one up is taken.
inline int ramond_partner_index(int i, int s, int m) {
  if (s % 2 == 0) throw std::invalid_argument("second index must be odd");
  if (i < 0 || i > 2 * m) throw std::invalid_argument("i outside [0, 2m]");
  if (i < m) return s > 0 ? -s : 2 - s;
  if (i < 2 * m) return s <= 1 ? 4 - s : 2 - s;
  return s <= 1 ? s - 2 : s + 2;
}

inline ExactSeries ramond_irred_char(const RamondHWLabel& l, const Rational& cutoff, bool split = false) {
  detail::check_m(l.m);
  const int s = l.s();
  const int s2 = ramond_partner_index(l.i, s, l.m);
  const long r = 2 * l.i + 2;
  Rational h1 = weight_rs(r, s, l.m), h2 = weight_rs(r, s2, l.m);
  if (h2 <= h1) throw std::logic_error("subtracted weight must lie above the highest weight");
  Rational shift = Rational(l.m * l.m) / (2 * (2 * l.m + 1)) - rat(1, 16);
  ExactSeries::Terms pair;
  pair.emplace(h1 + shift, Rational(1));
  pair.emplace(h2 + shift, Rational(-1));
  ExactSeries diff(std::move(pair), cutoff + 1);
  ExactSeries r2 = (prefactor_series(Prefactor::F2, cutoff + 1) * diff).truncate(cutoff);
  return (split ? Rational(1) : Rational(2)) * r2;
}

// Character of V_{L+gamma_i} (x) M: a Heisenberg Fock space 1/prod(1-q^n),
// the twisted fermion 2 prod(1+q^n), and the lattice sum over
// t = 1/2 + i + n(2m+1) of q^{(t-m)^2/(2(2m+1))}
inline ExactSeries fock_char(int i, int m, const Rational& cutoff) {
  detail::check_m(m);
  if (i < 0 || i > 2 * m) throw std::invalid_argument("fock_char index outside [0, 2m]");
  const long p = 2 * m + 1;
  Rational c = cutoff + 1;
  ExactSeries heis = divide(ExactSeries::one(c), product_expansion(-1, Rational(0), Rational(0), c));
  ExactSeries ferm = Rational(2) * product_expansion(1, Rational(0), Rational(0), c);
  ExactSeries::Terms lat;
  auto add = [&](long n) {
    Rational d = rat(1, 2) + i + n * p - m;
    Rational e = d * d / (2 * p);
    if (e >= c) return false;
    auto [pos, fresh] = lat.try_emplace(e, Rational(1));
    if (!fresh) pos->second += 1;
    return true;
  };
  // t - m changes sign between n = -1 and n = 0 for 0 <= i <= 2m
  for (long n = 0; add(n); ++n) {}
  for (long n = -1; add(n); --n) {}
  return (heis * ferm * ExactSeries(std::move(lat), c)).truncate(cutoff);
}

inline bool has_integer_coefficients(const ExactSeries& a) {
  for (const auto& [e, c] : a.terms())
    if (!is_integer(c)) return false;
  return true;
}

inline bool has_nonnegative_integer_coefficients(const ExactSeries& a) {
  for (const auto& [e, c] : a.terms())
    if (!is_integer(c) || c < 0) return false;
  return true;
}

// W(2m+1) characters chi_{Lambda(s)}, chi_{Pi(s)}, s = 1..2m+1, recovered
// from the SW(m) characters through the tau/2 relations
struct TripletCharacters {
  int m;
  std::vector<ExactSeries> lambda;  // lambda[s-1]
  std::vector<ExactSeries> pi;      // pi[s-1]
};

inline TripletCharacters triplet_char_bridge(int m, const Rational& cutoff) {
  detail::check_m(m);
  const int p = 2 * m + 1;
  // series in tau below cutoff/2 + 1 cover the doubled window
  Rational c = cutoff / 2 + 1;
  ExactSeries f = frak_f(c + 1), f2 = frak_f2(c + 1);
  TripletCharacters t{m, std::vector<ExactSeries>(p, ExactSeries(cutoff)), std::vector<ExactSeries>(p, ExactSeries(cutoff))};
  auto finish = [&](const ExactSeries& s, const std::string& what) {
    ExactSeries d = double_tau_relabel(s).truncate(cutoff);
    if (!has_integer_coefficients(d)) throw std::domain_error("bridge quotient for " + what + " is not integral");
    return d;
  };
  for (int i = 0; i <= m - 1; ++i)
    t.lambda[2 * i + 1] = finish(rat(1, 2) * (f * twisted_char({Family::RLambda, i + 1, m}, c)), "Lambda");
  for (int i = 0; i <= m; ++i)
    t.pi[2 * m - 2 * i] = finish(rat(1, 2) * (f * twisted_char({Family::RPi, m + 1 - i, m}, c)), "Pi");
  for (int i = 0; i <= m; ++i)
    t.lambda[2 * i] = finish(f2 * untwisted_char({Family::SLambda, i + 1, m}, c), "Lambda");
  for (int i = 0; i <= m - 1; ++i)
    t.pi[2 * m - 2 * i - 1] = finish(f2 * untwisted_char({Family::SPi, m - i, m}, c), "Pi");
  return t;
}

// Theta index j of an untwisted label: m - i for SLambda(i+1), SPi(m-i)
inline int untwisted_theta_j(const ModuleLabel& l) {
  if (l.family == Family::SLambda) return l.m - (l.index - 1);
  return l.index;
}

// h - c/24 read off the n = 0 theta term, j^2/(2(2m+1)) - 1/16. For SPi this
// term cancels in the character and the surviving top level is odd, so the
// parity reference has to come from here rather than from the leading term.
inline Rational untwisted_reference_exponent(const ModuleLabel& l) {
  int j = untwisted_theta_j(l);
  return Rational(j * j) / (2 * (2 * l.m + 1)) - rat(1, 16);
}

// max over coefficients of |chi(tau+1) - e^{2 pi i (h - c/24)} chi^F(tau)|,
// each term scaled by max(1, |coefficient|)
inline double super_vs_T(ModuleLabel l, const Rational& cutoff) {
  if (is_twisted(l.family)) throw std::invalid_argument("super_vs_T needs SLambda or SPi");
  l.flavor = Flavor::Character;
  ExactSeries ch = untwisted_char(l, cutoff);
  l.flavor = Flavor::Supercharacter;
  ExactSeries sc = untwisted_char(l, cutoff);
  Complex phase = unit_phase(untwisted_reference_exponent(l));
  ComplexSeries lhs = shift_tau(ch), rhs = phase * to_complex(sc);
  const ComplexSeries diff = lhs - rhs;
  double worst = 0.0;
  for (const auto& [e, c] : diff.terms()) {
    double scale = std::max({1.0, std::abs(lhs.coeff(e)), std::abs(rhs.coeff(e))});
    worst = std::max(worst, std::abs(c) / scale);
  }
  return worst;
}

// Supercharacter route of the bridge: chi_{W}((tau+1)/2) against
// f2 * chi^F_{SW}(tau) for W = Lambda(2i+1), Pi(2m-2i). The two sides agree
// up to the constant e^{pi i r0}, r0 = (m-i)^2/(2m+1) - 1/24 being the
// exponent of the n = 0 theta term of chi_W. Returns the scaled deviation
// as in super_vs_T.
inline double bridge_supercharacter_deviation(const TripletCharacters& t, const Rational& cutoff) {
  const int m = t.m;
  ExactSeries f2 = frak_f2(cutoff + 1);
  double worst = 0.0;
  auto compare = [&](const ExactSeries& w, const ModuleLabel& l, int j) {
    Rational r0 = Rational(j * j) / (2 * m + 1) - rat(1, 24);
    ComplexSeries lhs = shift_tau(half_tau_relabel(w));
    ComplexSeries rhs = unit_phase(r0 / 2) * to_complex((f2 * untwisted_char(l, cutoff + 1)));
    Rational cut = std::min({lhs.cutoff(), rhs.cutoff(), cutoff});
    lhs = lhs.truncate(cut);
    rhs = rhs.truncate(cut);
    const ComplexSeries diff = lhs - rhs;
    for (const auto& [e, c] : diff.terms()) {
      double scale = std::max({1.0, std::abs(lhs.coeff(e)), std::abs(rhs.coeff(e))});
      worst = std::max(worst, std::abs(c) / scale);
    }
  };
  for (int i = 0; i <= m; ++i)
    compare(t.lambda[2 * i], {Family::SLambda, i + 1, m, Flavor::Supercharacter}, m - i);
  for (int i = 0; i <= m - 1; ++i)
    compare(t.pi[2 * m - 2 * i - 1], {Family::SPi, m - i, m, Flavor::Supercharacter}, m - i);
  return worst;
}

// all labels for a given m: twisted, untwisted characters, supercharacters
inline std::vector<ModuleLabel> all_labels(int m) {
  detail::check_m(m);
  std::vector<ModuleLabel> out;
  for (int i = 1; i <= m; ++i) out.push_back({Family::RLambda, i, m});
  for (int i = 1; i <= m + 1; ++i) out.push_back({Family::RPi, i, m});
  for (Flavor fl : {Flavor::Character, Flavor::Supercharacter}) {
    for (int i = 1; i <= m + 1; ++i) out.push_back({Family::SLambda, i, m, fl});
    for (int i = 1; i <= m; ++i) out.push_back({Family::SPi, i, m, fl});
  }
  return out;
}

}  // namespace swtwist
