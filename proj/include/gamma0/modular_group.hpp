#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include "gamma0/dedekind.hpp"
#include "gamma0/integer.hpp"
#include "gamma0/rational.hpp"

namespace gamma0 {

/// An element (a, b; c, d) of SL2(Z). Determinant 1 is checked at construction.
class UniModular {
 public:
  UniModular() : a_(1), b_(0), c_(0), d_(1) {}
  UniModular(Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) {
      throw DomainError("matrix (" + a_.str() + "," + b_.str() + ";" + c_.str() + "," + d_.str() +
                        ") does not have determinant 1");
    }
  }

  static UniModular identity() { return {}; }
  static UniModular minus_identity() { return {-1, 0, 0, -1}; }
  static UniModular T() { return {1, 1, 0, 1}; }
  static UniModular S() { return {0, -1, 1, 0}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  friend UniModular operator*(const UniModular& x, const UniModular& y) {
    return UniModular(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                      x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_, Trusted{});
  }
  UniModular operator-() const { return UniModular(-a_, -b_, -c_, -d_, Trusted{}); }
  UniModular& operator*=(const UniModular& y) { return *this = *this * y; }

  UniModular inverse() const { return UniModular(d_, -b_, -c_, a_, Trusted{}); }

  /// x^n for any integer n (negative powers use the inverse).
  UniModular pow(std::int64_t n) const {
    UniModular base = n < 0 ? inverse() : *this;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    UniModular acc;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  bool is_plus_minus_identity() const { return b_ == 0 && c_ == 0 && a_ == d_; }

  friend bool operator==(const UniModular&, const UniModular&) = default;

  std::string str() const {
    return "(" + a_.str() + "," + b_.str() + ";" + c_.str() + "," + d_.str() + ")";
  }

 private:
  struct Trusted {};
  UniModular(Integer a, Integer b, Integer c, Integer d, Trusted)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  Integer a_, b_, c_, d_;
};

inline std::ostream& operator<<(std::ostream& os, const UniModular& x) { return os << x.str(); }

inline UniModular multiply(const UniModular& x, const UniModular& y) { return x * y; }
inline UniModular invert(const UniModular& x) { return x.inverse(); }

/// A matrix of SL2(Z) together with a level N dividing its lower-left entry.
class Gamma0Element {
 public:
  Gamma0Element(UniModular m, std::int64_t level) : m_(std::move(m)), level_(level) {
    if (level_ < 1) throw DomainError("level must be positive");
    if (m_.c() % level_ != 0)
      throw DomainError("matrix " + m_.str() + " is not in Gamma0(" + std::to_string(level_) + ")");
  }

  const UniModular& matrix() const { return m_; }
  std::int64_t level() const { return level_; }

  friend Gamma0Element operator*(const Gamma0Element& x, const Gamma0Element& y) {
    if (x.level_ != y.level_) throw DomainError("level mismatch in Gamma0 product");
    return Gamma0Element(x.m_ * y.m_, x.level_);
  }

  friend bool operator==(const Gamma0Element&, const Gamma0Element&) = default;

 private:
  UniModular m_;
  std::int64_t level_;
};

inline bool in_gamma0(const UniModular& m, std::int64_t level) { return m.c() % level == 0; }

/// The integer-valued variant of Rademacher's Psi:
///   c > 0:         (a+d)/c + 12 s(-d, c) - 3
///   c < 0:         (a+d)/c + 12 s(d, -c) + 3
///   c = 0, a > 0:  b
///   c = 0, a < 0:  -b - 6
/// Psi(gamma1 gamma2) = Psi(gamma1) + Psi(gamma2) + omega(gamma1, gamma2); Psi mod 12 is a
/// homomorphism SL2(Z) -> Z/12.
inline Integer psi(const UniModular& g) {
  const Integer& a = g.a();
  const Integer& c = g.c();
  const Integer& d = g.d();
  if (c == 0) return a > 0 ? g.b() : Integer(-g.b() - 6);
  // With k = |c| and h = -sign(c) d the rational part is ((a+d) sign(c) + 12 k s(h,k)) / k.
  const Integer k = c > 0 ? c : Integer(-c);
  const Integer h = c > 0 ? Integer(-d) : d;
  const Integer numer = (c > 0 ? Integer(a + d) : Integer(-(a + d))) + dedekind_sum_times_12k(h, k);
  if (numer % k != 0) {
    throw InternalError("psi: non-integral value " + numer.str() + "/" + k.str() + " at " + g.str());
  }
  return numer / k + (c > 0 ? -3 : 3);
}

/// Correction term of the composition law, read off the signs of lower-left entries.
inline int omega(const UniModular& x, const UniModular& y) {
  const Integer c3 = x.c() * y.a() + x.d() * y.c();
  const bool c1_pos = x.c() >= 0, c2_pos = y.c() >= 0;
  if (x.c() == 0 && y.c() == 0 && x.d() < 0 && y.d() < 0) return 12;
  if (c1_pos && c2_pos && c3 < 0) return 12;
  if (x.c() < 0 && y.c() < 0 && c3 >= 0) return -12;
  return 0;
}

/// The linear character chi_t(gamma) = e(t Psi(gamma) / 12) of SL2(Z); t is read mod 12.
inline CircleExponent chi_t(std::int64_t t, const UniModular& g) {
  return CircleExponent(Rational(Integer(t) * psi(g), 12));
}

/// sigma_{N,l}(gamma) = Psi(gamma) - Psi(B_l^{-1} gamma B_l), B_l = diag(1, l),
/// where the conjugate is (a, l b; c/l, d). Requires l | N.
/// `psi_g` lets callers that need several l reuse Psi(gamma).
inline Integer sigma_N_l(const Gamma0Element& g, std::int64_t l, const Integer& psi_g) {
  if (l < 1 || g.level() % l != 0) {
    throw DomainError("sigma: l = " + std::to_string(l) + " does not divide N = " +
                      std::to_string(g.level()));
  }
  if (l == 1) return 0;
  const UniModular& m = g.matrix();
  const UniModular conj(m.a(), m.b() * l, m.c() / l, m.d());
  return psi_g - psi(conj);
}

inline Integer sigma_N_l(const Gamma0Element& g, std::int64_t l) { return sigma_N_l(g, l, psi(g.matrix())); }

}  // namespace gamma0
