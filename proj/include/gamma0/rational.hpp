#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "gamma0/integer.hpp"

namespace gamma0 {

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n), den_(1) {}           // NOLINT(google-explicit-constructor)
  Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Integer floor() const { return floor_div(num_, den_); }

  Rational operator-() const { return Rational(Integer(-num_), den_, Normalized{}); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    if (x.den_ == y.den_) return Rational(x.num_ + y.num_, x.den_);
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw DomainError("division by zero");
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    Integer lhs = x.num_ * y.den_;
    Integer rhs = y.num_ * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Always "p/q", including integers ("3/1") and zero ("0/1").
  std::string str() const { return num_.str() + "/" + den_.str(); }

  /// Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer d = parse_integer(text.substr(slash + 1));
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(text.substr(0, slash)), d);
  }

 private:
  struct Normalized {};
  Rational(Integer n, Integer d, Normalized) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw DomainError("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g != 1 && g != 0) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Integer num_;
  Integer den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

/// A value x mod 1 standing for the unit-circle point e(x) = exp(2 pi i x).
/// The representative always lies in [0, 1), so equality is equality of points.
class CircleExponent {
 public:
  CircleExponent() = default;
  explicit CircleExponent(const Rational& x) : value_(x - Rational(x.floor())) {}

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  friend CircleExponent operator+(const CircleExponent& x, const CircleExponent& y) {
    return CircleExponent(x.value_ + y.value_);
  }
  friend CircleExponent operator-(const CircleExponent& x, const CircleExponent& y) {
    return CircleExponent(x.value_ - y.value_);
  }
  CircleExponent operator-() const { return CircleExponent(-value_); }
  friend CircleExponent operator*(const Integer& k, const CircleExponent& x) {
    return CircleExponent(Rational(k) * x.value_);
  }
  CircleExponent& operator+=(const CircleExponent& y) { return *this = *this + y; }

  friend bool operator==(const CircleExponent&, const CircleExponent&) = default;
  friend auto operator<=>(const CircleExponent& x, const CircleExponent& y) {
    return x.value_ <=> y.value_;
  }

  std::string str() const { return value_.str(); }

 private:
  Rational value_;
};

inline std::ostream& operator<<(std::ostream& os, const CircleExponent& x) { return os << x.str(); }

}  // namespace gamma0
