#pragma once

#include "combinatorics.hpp"
#include "linalg.hpp"
#include "qseries.hpp"
#include "quad_rational.hpp"
#include "report.hpp"

#include <functional>
#include <map>
#include <vector>

namespace swtwist {

// Ramond: index k stands for phi(-k), k >= 0, with phi(0)^2 = 1/2 on M.
// NeveuSchwarz: index k stands for phi(-k-1/2).
enum class Sector { Ramond, NeveuSchwarz };

// strictly decreasing list of indices
using Monomial = std::vector<int>;

inline Rational monomial_grade(Sector s, const Monomial& mono) {
  Rational g = 0;
  for (int k : mono) g += k;
  if (s == Sector::NeveuSchwarz) g += Rational(static_cast<long>(mono.size())) / 2;
  return g;
}

// Finite combination of monomials applied to the vacuum, truncated above a
// grade cutoff. Terms pushed past the cutoff are dropped and flagged.
class FockVector {
 public:
  using Terms = std::map<Monomial, QuadRational>;

  FockVector(Sector s, Rational cutoff) : sector_(s), cutoff_(std::move(cutoff)) {}

  static FockVector vacuum(Sector s, const Rational& cutoff) { return basis(s, {}, cutoff); }
  static FockVector basis(Sector s, Monomial mono, const Rational& cutoff) {
    FockVector v(s, cutoff);
    v.add_term(std::move(mono), QuadRational(1));
    return v;
  }

  Sector sector() const { return sector_; }
  const Rational& cutoff() const { return cutoff_; }
  const Terms& terms() const { return terms_; }
  bool truncated() const { return truncated_; }
  bool is_zero() const { return terms_.empty(); }
  QuadRational coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? QuadRational() : it->second;
  }

  void add_term(Monomial mono, const QuadRational& c) {
    if (c.is_zero()) return;
    if (monomial_grade(sector_, mono) > cutoff_) {
      truncated_ = true;
      return;
    }
    auto [it, fresh] = terms_.try_emplace(std::move(mono), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void mark_truncated() { truncated_ = true; }

  FockVector& operator+=(const FockVector& o) {
    check_same(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    truncated_ = truncated_ || o.truncated_;
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a += QuadRational(-1) * b; }
  friend FockVector operator*(const QuadRational& s, const FockVector& v) {
    FockVector out(v.sector_, v.cutoff_);
    for (const auto& [mono, c] : v.terms_) out.add_term(mono, s * c);
    out.truncated_ = v.truncated_;
    return out;
  }
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.sector_ == b.sector_ && a.terms_ == b.terms_;
  }

  Rational max_grade() const {
    Rational g = 0;
    for (const auto& [mono, c] : terms_) g = std::max(g, monomial_grade(sector_, mono));
    return g;
  }
  int max_index() const {
    int k = 0;
    for (const auto& [mono, c] : terms_)
      if (!mono.empty()) k = std::max(k, mono.front());
    return k;
  }

 private:
  void check_same(const FockVector& o) const {
    if (o.sector_ != sector_) throw std::invalid_argument("mixing Ramond and NS Fock vectors");
  }

  Sector sector_;
  Rational cutoff_;
  Terms terms_;
  bool truncated_ = false;
};

namespace detail {

// index k into a monomial: sign is (-1)^{number of larger indices}
inline void create_into(FockVector& out, const Monomial& mono, const QuadRational& c, int k) {
  std::size_t pos = 0;
  while (pos < mono.size() && mono[pos] > k) ++pos;
  if (pos < mono.size() && mono[pos] == k) return;
  Monomial next = mono;
  next.insert(next.begin() + static_cast<long>(pos), k);
  out.add_term(std::move(next), pos % 2 ? -c : c);
}

inline void annihilate_into(FockVector& out, const Monomial& mono, const QuadRational& c, int k) {
  for (std::size_t pos = 0; pos < mono.size(); ++pos)
    if (mono[pos] == k) {
      Monomial next = mono;
      next.erase(next.begin() + static_cast<long>(pos));
      out.add_term(std::move(next), pos % 2 ? -c : c);
      return;
    }
}

}  // namespace detail

// phi(mode) v; Ramond modes are integers, NS modes half-odd integers
inline FockVector phi(const Rational& mode, const FockVector& v) {
  FockVector out(v.sector(), v.cutoff());
  if (v.truncated()) out.mark_truncated();
  if (v.sector() == Sector::Ramond) {
    if (!is_integer(mode)) throw std::invalid_argument("Ramond fermion modes are integers");
    long n = to_long(num(mode));
    for (const auto& [mono, c] : v.terms()) {
      if (n < 0) detail::create_into(out, mono, c, static_cast<int>(-n));
      else if (n > 0) detail::annihilate_into(out, mono, c, static_cast<int>(n));
      else if (mono.empty() || mono.back() != 0) detail::create_into(out, mono, c, 0);
      else {
        // phi(0) moves past size-1 odd factors and squares to 1/2
        Monomial next(mono.begin(), mono.end() - 1);
        QuadRational h = rat(1, 2) * c;
        if (next.size() % 2) h = -h;
        out.add_term(std::move(next), h);
      }
    }
  } else {
    if (!is_half_odd(mode)) throw std::invalid_argument("NS fermion modes are half-odd integers");
    for (const auto& [mono, c] : v.terms()) {
      if (mode < 0) detail::create_into(out, mono, c, static_cast<int>(to_long(num(-mode - rat(1, 2)))));
      else detail::annihilate_into(out, mono, c, static_cast<int>(to_long(num(mode - rat(1, 2)))));
    }
  }
  return out;
}

inline FockVector phi(long mode, const FockVector& v) { return phi(Rational(mode), v); }

// 1_pm = 1 +- sqrt2 phi(0) 1 on M
inline FockVector vacuum_pm(int sign, const Rational& cutoff) {
  auto one = FockVector::vacuum(Sector::Ramond, cutoff);
  QuadRational s = sign > 0 ? QuadRational::sqrt2() : -QuadRational::sqrt2();
  return one + s * phi(0L, one);
}

// L(0) on M as grade + 1/16
inline FockVector l0_grading(const FockVector& v) {
  if (v.sector() != Sector::Ramond) throw std::invalid_argument("l0_grading acts on the Ramond module");
  FockVector out(v.sector(), v.cutoff());
  for (const auto& [mono, c] : v.terms())
    out.add_term(mono, QuadRational(monomial_grade(Sector::Ramond, mono) + rat(1, 16)) * c);
  return out;
}

// L(n) = (1/2) sum_k (k - n/2) :phi(n-k) phi(k): + delta_{n,0}/16 on M,
// annihilators (positive modes) to the right inside :..:
inline FockVector virasoro_mode(long n, const FockVector& v) {
  if (v.sector() != Sector::Ramond) throw std::invalid_argument("virasoro_mode acts on the Ramond module");
  FockVector out(v.sector(), v.cutoff());
  if (v.truncated()) out.mark_truncated();
  long reach = v.max_index() + std::labs(n) + 2;
  for (long k = -reach; k <= reach; ++k) {
    long a = n - k, b = k;
    Rational w = (Rational(k) - Rational(n) / 2) / 2;
    if (w == 0) continue;
    FockVector t = (a > 0 && b <= 0) ? QuadRational(-1) * phi(b, phi(a, v)) : phi(a, phi(b, v));
    out += QuadRational(w) * t;
  }
  if (n == 0) out += QuadRational(rat(1, 16)) * v;
  return out;
}

// all monomials of grade <= max_grade
inline std::vector<Monomial> basis_monomials(Sector s, const Rational& max_grade) {
  std::vector<Monomial> out;
  std::function<void(Monomial&, int)> rec = [&](Monomial& cur, int below) {
    out.push_back(cur);
    for (int k = below - 1; k >= 0; --k) {
      cur.push_back(k);
      if (monomial_grade(s, cur) <= max_grade) rec(cur, k);
      cur.pop_back();
    }
  };
  Monomial cur;
  rec(cur, static_cast<int>(floor_int(max_grade)) + 1);
  return out;
}

// C_{m,n} = (1/2) (m-n)/(m+n+1) binom(-1/2,m) binom(-1/2,n)
inline Rational cmn(unsigned m, unsigned n) {
  return rat(1, 2) * Rational(static_cast<long>(m) - static_cast<long>(n)) / Rational(m + n + 1) *
         binom(rat(-1, 2), m) * binom(rat(-1, 2), n);
}

using CmnTable = std::vector<std::vector<Rational>>;

inline CmnTable cmn_table(unsigned n) {
  CmnTable t(n + 1, std::vector<Rational>(n + 1));
  for (unsigned a = 0; a <= n; ++a)
    for (unsigned b = 0; b <= n; ++b) t[a][b] = cmn(a, b);
  return t;
}

// Expands (x2 - x1) G = (1/2)((1+x1)^{1/2}(1+x2)^{-1/2} + (1+x1)^{-1/2}(1+x2)^{1/2} - 2)
// and solves for the coefficients of G degree by degree; compares with the
// table to total degree n.
inline Report cmn_generating_check(unsigned n, const CmnTable& table) {
  Report r;
  r.suite = "cmn";
  std::vector<std::vector<Rational>> rhs(n + 2, std::vector<Rational>(n + 2));
  for (unsigned a = 0; a <= n + 1; ++a)
    for (unsigned b = 0; a + b <= n + 1; ++b) {
      Rational v = (binom(rat(1, 2), a) * binom(rat(-1, 2), b) + binom(rat(-1, 2), a) * binom(rat(1, 2), b)) / 2;
      rhs[a][b] = (a == 0 && b == 0) ? v - 1 : v;
    }
  // coefficient of x1^a x2^{b+1}: G_{a,b} - G_{a-1,b+1} = R_{a,b+1}
  std::vector<std::vector<Rational>> g(n + 1, std::vector<Rational>(n + 2));
  for (unsigned d = 0; d <= n; ++d)
    for (unsigned a = 0; a <= d; ++a) {
      unsigned b = d - a;
      g[a][b] = rhs[a][b + 1] + (a > 0 ? g[a - 1][b + 1] : Rational(0));
    }
  bool match = true, consistent = true, anti = true;
  for (unsigned a = 0; a <= n; ++a)
    for (unsigned b = 0; a + b <= n; ++b) {
      match = match && g[a][b] == table.at(a).at(b);
      anti = anti && table[a][b] == -table[b][a];
    }
  // coefficient of x1^a x2^0: -G_{a-1,0} = R_{a,0}
  for (unsigned a = 1; a <= n + 1; ++a) consistent = consistent && rhs[a][0] == -g[a - 1][0];
  r.add("cmn_antisymmetry", "C_{m,n} = -C_{n,m}", anti);
  r.add("cmn_generating_function", "sum C_{m,n} x1^m x2^n equals the closed form G(x1,x2) to total degree " +
        std::to_string(n), match && consistent, match ? (consistent ? "" : "x2^0 row inconsistent") : "");
  return r;
}

inline Report cmn_generating_check(unsigned n) { return cmn_generating_check(n, cmn_table(n)); }

// Laurent polynomial in x with Fock vector coefficients
using XLaurentVector = std::map<long, FockVector>;

// Delta_x = (1/2) sum C_{m,n} phi(m+1/2) phi(n+1/2) x^{-m-n-1} on the NS space
inline XLaurentVector delta_x(const FockVector& v, const CmnTable& table) {
  if (v.sector() != Sector::NeveuSchwarz) throw std::invalid_argument("Delta_x acts on the NS space");
  XLaurentVector out;
  int top = v.max_index();
  if (static_cast<std::size_t>(top) >= table.size()) throw std::out_of_range("C_{m,n} table too small");
  for (int m = 0; m <= top; ++m)
    for (int n = 0; n <= top; ++n) {
      if (table[m][n] == 0) continue;
      FockVector t = phi(Rational(m) + rat(1, 2), phi(Rational(n) + rat(1, 2), v));
      if (t.is_zero()) continue;
      long power = -(m + n + 1);
      auto it = out.try_emplace(power, v.sector(), v.cutoff()).first;
      it->second += QuadRational(table[m][n] / 2) * t;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline XLaurentVector delta_x(const XLaurentVector& v, const CmnTable& table) {
  XLaurentVector out;
  for (const auto& [p, vec] : v)
    for (const auto& [q, w] : delta_x(vec, table)) {
      auto it = out.try_emplace(p + q, w.sector(), w.cutoff()).first;
      it->second += w;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// omega_s = (1/2) phi(-3/2) phi(-1/2) 1
inline FockVector omega_s(const Rational& cutoff = Rational(4)) {
  auto one = FockVector::vacuum(Sector::NeveuSchwarz, cutoff);
  return QuadRational(rat(1, 2)) * phi(rat(-3, 2), phi(rat(-1, 2), one));
}

// tr q^{L(0) - 1/48} over M, by counting monomials per grade
inline ExactSeries graded_dimension_M(const Rational& cutoff) {
  const Rational shift = rat(1, 16) - rat(1, 48);
  ExactSeries::Terms t;
  for (const auto& mono : basis_monomials(Sector::Ramond, cutoff - shift))
    t[monomial_grade(Sector::Ramond, mono) + shift] += 1;
  return ExactSeries(std::move(t), cutoff);
}

// vectors phi(-n_1)...phi(-n_k) 1_pm with distinct n_i > 0 at grade g
inline std::vector<FockVector> half_module_words(int sign, int g, const Rational& cutoff) {
  std::vector<FockVector> out;
  FockVector top = vacuum_pm(sign, cutoff);
  for (const auto& mono : basis_monomials(Sector::Ramond, Rational(g))) {
    if (monomial_grade(Sector::Ramond, mono) != g || (!mono.empty() && mono.back() == 0)) continue;
    FockVector v = top;
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) v = phi(-static_cast<long>(*it), v);
    out.push_back(std::move(v));
  }
  return out;
}

// rank over Q(sqrt 2) of a family of Fock vectors
inline std::size_t fock_rank(const std::vector<FockVector>& vs) {
  std::map<Monomial, std::size_t> cols;
  for (const auto& v : vs)
    for (const auto& [mono, c] : v.terms()) cols.try_emplace(mono, cols.size());
  Matrix<QuadRational> a(vs.size(), std::vector<QuadRational>(cols.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (const auto& [mono, c] : vs[i].terms()) a[i][cols[mono]] = c;
  return rank(a);
}

// graded dimension of M^{+} or M^{-}, from ranks of the word spans
inline ExactSeries graded_dimension_half(int sign, const Rational& cutoff) {
  const Rational shift = rat(1, 16) - rat(1, 48);
  ExactSeries::Terms t;
  for (int g = 0; shift + g < cutoff; ++g)
    t[shift + g] = Rational(static_cast<long>(fock_rank(half_module_words(sign, g, Rational(g)))));
  return ExactSeries(std::move(t), cutoff);
}

}  // namespace swtwist
