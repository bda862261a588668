#pragma once

#include <cstdint>
#include <random>

#include "gamma0/generators.hpp"
#include "gamma0/modular_group.hpp"

namespace gamma0 {

/// Seeded generator whose draws are identical on every platform
/// (mt19937_64 is fully specified; range reduction is done here, not by <random>).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Product of 1..max_len letters drawn uniformly from {T, T^-1, S}.
inline UniModular random_sl2z(Rng& rng, int max_len = 40) {
  static const UniModular letters[3] = {UniModular::T(), UniModular::T().inverse(), UniModular::S()};
  const auto len = rng.uniform(1, max_len);
  UniModular g;
  for (std::int64_t i = 0; i < len; ++i) g *= letters[rng.uniform(0, 2)];
  return g;
}

/// Random element of Gamma0(N): +-1 times 0..max_len generator powers.
inline UniModular random_gamma0(const GeneratorSet& gs, Rng& rng, int max_len = 30) {
  const auto refs = gs.refs();
  UniModular g = rng.uniform(0, 1) ? UniModular::minus_identity() : UniModular::identity();
  if (refs.empty()) return g;
  const auto len = rng.uniform(0, max_len);
  for (std::int64_t i = 0; i < len; ++i) {
    const GeneratorRef ref = refs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(refs.size()) - 1))];
    std::int64_t e = 1;
    if (ref.kind == GeneratorKind::Free) {
      e = rng.uniform(1, 2) * (rng.uniform(0, 1) ? 1 : -1);
    } else if (ref.kind == GeneratorKind::Elliptic3) {
      e = rng.uniform(1, 2);
    }
    g *= gs.at(ref).pow(e);
  }
  return g;
}

}  // namespace gamma0
