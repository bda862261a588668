#pragma once

#include "gamma0/integer.hpp"
#include "gamma0/rational.hpp"

namespace gamma0 {

namespace detail {

inline void check_dedekind_args(const Integer& h, const Integer& k) {
  if (k < 1) throw DomainError("dedekind sum: k must be positive, got " + k.str());
  if (gcd(h, k) != 1)
    throw DomainError("dedekind sum: arguments not coprime (" + h.str() + ", " + k.str() + ")");
}

}  // namespace detail

/// s(h, k) by direct summation over r = 1..k-1. O(k); kept as the reference oracle.
///
/// Each term is (r/k)((hr/k)) with ((x)) = x - floor(x) - 1/2, never at an integer
/// since gcd(h, k) = 1. The sum is accumulated as the integer sum of r * (hr mod k)
/// over k^2, minus (k - 1)/4.
inline Rational dedekind_sum(const Integer& h, const Integer& k) {
  detail::check_dedekind_args(h, k);
  if (k == 1) return Rational();
  const Integer hk = mod_floor(h, k);
  Integer weighted;
  if (k < (Integer(1) << 31)) {
    const auto kk = k.convert_to<std::int64_t>();
    const auto hh = hk.convert_to<std::int64_t>();
    __int128 acc = 0;
    std::int64_t hr = 0;  // h * r mod k, advanced incrementally
    for (std::int64_t r = 1; r < kk; ++r) {
      hr += hh;
      if (hr >= kk) hr -= kk;
      acc += static_cast<__int128>(r) * hr;
    }
    // acc < k^3 < 2^93; split into two 64-bit halves for the conversion.
    const auto hi = static_cast<std::uint64_t>(acc >> 64);
    const auto lo = static_cast<std::uint64_t>(acc);
    weighted = (Integer(hi) << 64) + Integer(lo);
  } else {
    for (Integer r = 1; r < k; ++r) weighted += r * ((hk * r) % k);
  }
  return Rational(weighted, k * k) - Rational(k - 1, 4);
}

/// 12 k s(h, k), which is always an integer.
///
/// Euclid's algorithm on (k, h mod k) with quotients q_0..q_{n-1} gives, after
/// unrolling reciprocity and telescoping,
///   12 s(h, k) = sum_i (-1)^i (q_i - 3) + (h + h') / k,
/// where h' is the Bezout cofactor with h h' = 1 mod k produced by the same run.
namespace detail {

// Same recurrence in machine words for k < 2^61. Remainders and cofactors stay
// within [-k, k] and q * y within 2k; only the final k * acc needs 128 bits.
inline constexpr std::int64_t kSmallDedekindLimit = std::int64_t{1} << 61;

inline Integer dedekind_12k_small(std::int64_t h, std::int64_t k) {
  const std::int64_t hk = ((h % k) + k) % k;
  std::int64_t r_prev = k, r = hk, y_prev = 0, y = 1, acc = 0;
  bool positive = true;
  while (r != 0) {
    const std::int64_t q = r_prev / r;
    acc += positive ? q - 3 : 3 - q;
    const std::int64_t r_next = r_prev - q * r;
    const std::int64_t y_next = y_prev - q * y;
    r_prev = r;
    r = r_next;
    y_prev = y;
    y = y_next;
    positive = !positive;
  }
  if (r_prev != 1)
    throw DomainError("dedekind sum: arguments not coprime (" + std::to_string(h) + ", " + std::to_string(k) + ")");
  const __int128 total = static_cast<__int128>(acc) * k + hk + y_prev;
  return Integer(total);
}

}  // namespace detail

inline Integer dedekind_sum_times_12k(const Integer& h, const Integer& k) {
  if (k < 1) throw DomainError("dedekind sum: k must be positive, got " + k.str());
  if (k == 1) return 0;
  if (k < detail::kSmallDedekindLimit && fits_int64(h)) return detail::dedekind_12k_small(to_int64(h), to_int64(k));
  detail::check_dedekind_args(h, k);
  const Integer hk = mod_floor(h, k);
  Integer r_prev = k, r = hk;
  Integer y_prev = 0, y = 1;
  Integer acc = 0;
  bool positive = true;
  while (r != 0) {
    Integer q = r_prev / r;
    if (positive) {
      acc += q - 3;
    } else {
      acc -= q - 3;
    }
    Integer r_next = r_prev - q * r;
    Integer y_next = y_prev - q * y;
    r_prev = std::move(r);
    r = std::move(r_next);
    y_prev = std::move(y);
    y = std::move(y_next);
    positive = !positive;
  }
  return acc * k + hk + y_prev;
}

/// s(h, k) in O(log k) integer steps; agrees with dedekind_sum everywhere.
inline Rational dedekind_sum_fast(const Integer& h, const Integer& k) {
  return Rational(dedekind_sum_times_12k(h, k), 12 * k);
}

}  // namespace gamma0
