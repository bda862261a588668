#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace gamma0 {

using Integer = boost::multiprecision::cpp_int;

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an arithmetic identity that must hold fails (an implementation bug).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a proven statement is observed to fail; carries a serialized witness.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& what, std::string witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor division (rounds toward negative infinity); `b` must be nonzero.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Non-negative remainder in [0, |m|).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const Integer& x) {
  if (!fits_int64(x)) throw DomainError("integer does not fit in 64 bits: " + x.str());
  return x.convert_to<std::int64_t>();
}

inline Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw DomainError("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9')
      throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text[0] == '+' ? text.substr(1) : text));
}

/// Inverse of `a` modulo `m` (m >= 1), in [0, m).
inline Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m < 1) throw DomainError("mod_inverse: modulus must be positive");
  Integer old_r = mod_floor(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = std::move(r);
    r = std::move(t);
    t = old_s - q * s;
    old_s = std::move(s);
    s = std::move(t);
  }
  if (old_r != 1) throw DomainError("mod_inverse: " + a.str() + " is not invertible mod " + m.str());
  return mod_floor(old_s, m);
}

}  // namespace gamma0
