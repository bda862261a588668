#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamma0/integer.hpp"
#include "gamma0/modular_group.hpp"

namespace gamma0 {

/// [SL2(Z) : Gamma0(N)] = N prod_{p | N} (1 + 1/p).
inline std::int64_t index_gamma0(std::int64_t n) {
  if (n < 1) throw DomainError("index_gamma0: N must be positive");
  std::int64_t index = n;
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    index = index / p * (p + 1);
  }
  if (m > 1) index = index / m * (m + 1);
  return index;
}

/// A cusp p/q in projective form; q >= 0, and q = 0 is infinity (p = 1) or the
/// left boundary symbol (p = -1).
struct Cusp {
  std::int64_t p = 0;
  std::int64_t q = 1;
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

enum class SideKind { Even, Odd, Free };

struct SidePairing {
  SideKind kind = SideKind::Free;
  std::size_t pair_id = 0;  // meaningful for Free only
  friend bool operator==(const SidePairing&, const SidePairing&) = default;
};

/// Which unpaired side gets split when no pairing applies. SmallestMediant keeps
/// cusp denominators small; the positional orders can zoom into one cusp and hit
/// the 64-bit limit at some levels (reported as a DomainError).
enum class SubdivisionOrder { SmallestMediant, Leftmost, Rightmost };

namespace detail {

/// 2x2 matrix over int64 with overflow-checked products; used while the Farey
/// symbol is built, where all entries stay of size O(N^2).
struct Mat64 {
  std::int64_t a, b, c, d;

  static std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw DomainError("Farey symbol: 64-bit overflow");
    return r;
  }
  static std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw DomainError("Farey symbol: 64-bit overflow");
    return r;
  }
  friend Mat64 operator*(const Mat64& x, const Mat64& y) {
    return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
            add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
  }
  Mat64 inverse() const { return {d, -b, -c, a}; }
  UniModular to_unimodular() const { return UniModular(a, b, c, d); }
};

inline constexpr Mat64 kS{0, -1, 1, 0};
// Order-3 rotation taking 0 -> 1 -> infinity -> 0; its cube is -I.
inline constexpr Mat64 kUinv{0, 1, -1, 1};

}  // namespace detail

/// Kulkarni's Farey symbol for Gamma0(N).
///
/// `vertices` runs -infinity, x_0 < x_1 < ... < x_n, infinity with consecutive
/// entries unimodular (p_{k+1} q_k - p_k q_{k+1} = 1). Side k joins vertices k and
/// k+1 and carries one pairing label.
class FareySymbol {
 public:
  FareySymbol() = default;
  FareySymbol(std::int64_t level, std::vector<Cusp> vertices, std::vector<SidePairing> pairings)
      : level_(level), vertices_(std::move(vertices)), pairings_(std::move(pairings)) {
    validate();
  }

  std::int64_t level() const { return level_; }
  const std::vector<Cusp>& vertices() const { return vertices_; }
  const std::vector<SidePairing>& pairings() const { return pairings_; }
  std::size_t side_count() const { return pairings_.size(); }

  std::size_t count(SideKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        pairings_.begin(), pairings_.end(), [kind](const SidePairing& s) { return s.kind == kind; }));
  }
  std::size_t free_pair_count() const { return count(SideKind::Free) / 2; }

  /// The matrix (p_{k+1}, p_k; q_{k+1}, q_k) sending 0 and infinity to the ends of side k.
  detail::Mat64 side_matrix(std::size_t k) const {
    const Cusp& lo = vertices_[k];
    const Cusp& hi = vertices_[k + 1];
    return {hi.p, lo.p, hi.q, lo.q};
  }

  /// The other side carrying the same free label.
  std::size_t partner(std::size_t k) const {
    for (std::size_t j = 0; j < pairings_.size(); ++j) {
      if (j != k && pairings_[j].kind == SideKind::Free && pairings_[k].kind == SideKind::Free &&
          pairings_[j].pair_id == pairings_[k].pair_id)
        return j;
    }
    throw InternalError("Farey symbol: side " + std::to_string(k) + " has no partner");
  }

  /// Side-pairing transformation attached to side k:
  ///   Even: M S M^-1 (squares to -I)
  ///   Odd:  M U^-1 M^-1 (cubes to -I)
  ///   Free with partner j < k: M_k S M_j^-1, which takes side j onto side k.
  /// For a free label this returns the matrix of the pair, whichever side is asked.
  UniModular pairing_matrix(std::size_t k) const {
    const SidePairing& s = pairings_[k];
    const detail::Mat64 m = side_matrix(k);
    switch (s.kind) {
      case SideKind::Even:
        return (m * detail::kS * m.inverse()).to_unimodular();
      case SideKind::Odd:
        return (m * detail::kUinv * m.inverse()).to_unimodular();
      case SideKind::Free: {
        const std::size_t j = partner(k);
        const std::size_t later = std::max(j, k), earlier = std::min(j, k);
        return (side_matrix(later) * detail::kS * side_matrix(earlier).inverse()).to_unimodular();
      }
    }
    throw InternalError("unreachable");
  }

  /// Checks the structural invariants; throws DomainError on violation.
  void validate() const {
    if (level_ < 1) throw DomainError("Farey symbol: level must be positive");
    if (vertices_.size() < 3 || pairings_.size() + 1 != vertices_.size())
      throw DomainError("Farey symbol: vertex/side count mismatch");
    if (vertices_.front() != Cusp{-1, 0} || vertices_.back() != Cusp{1, 0})
      throw DomainError("Farey symbol: must start at -infinity and end at infinity");
    for (std::size_t k = 0; k + 1 < vertices_.size(); ++k) {
      const Cusp& lo = vertices_[k];
      const Cusp& hi = vertices_[k + 1];
      if (k + 1 < vertices_.size() - 1 && hi.q <= 0)
        throw DomainError("Farey symbol: interior vertex with non-positive denominator");
      if (hi.p * lo.q - lo.p * hi.q != 1)
        throw DomainError("Farey symbol: sides " + std::to_string(k) + " not unimodular");
    }
    std::vector<int> uses;
    for (const auto& s : pairings_) {
      if (s.kind != SideKind::Free) continue;
      if (s.pair_id >= uses.size()) uses.resize(s.pair_id + 1, 0);
      ++uses[s.pair_id];
    }
    for (int u : uses) {
      if (u != 2) throw DomainError("Farey symbol: every free pair id must occur exactly twice");
    }
    for (std::size_t k = 0; k < pairings_.size(); ++k) {
      if (pairing_matrix(k).c() % level_ != 0)
        throw DomainError("Farey symbol: pairing of side " + std::to_string(k) + " is not in Gamma0(" +
                          std::to_string(level_) + ")");
    }
    // triangles contribute 3 copies of the standard domain each, odd sides one more
    const auto area = 3 * static_cast<std::int64_t>(vertices_.size() - 3) + static_cast<std::int64_t>(count(SideKind::Odd));
    if (area != index_gamma0(level_)) throw DomainError("Farey symbol: area does not match the index");
  }

  friend bool operator==(const FareySymbol&, const FareySymbol&) = default;

 private:
  std::int64_t level_ = 1;
  std::vector<Cusp> vertices_;
  std::vector<SidePairing> pairings_;
};

namespace detail {

inline bool in_gamma0(const Mat64& m, std::int64_t level) { return m.c % level == 0; }

}  // namespace detail

/// Builds the Farey symbol of Gamma0(N), N >= 2, by mediant subdivision.
///
/// Starting from -infinity, 0, 1, infinity, every unpaired side is tested for an
/// even pairing, an odd pairing, or a free pairing with another unpaired side; when
/// a full pass pairs nothing new, one unpaired side is split at its mediant (by
/// default the one whose mediant has the smallest denominator, leftmost on ties). Each added triangle is inequivalent to those already present, so
/// the process stops exactly when the polygon is a fundamental domain.
inline FareySymbol farey_symbol(std::int64_t level,
                                SubdivisionOrder order = SubdivisionOrder::SmallestMediant) {
  if (level < 2) throw DomainError("farey_symbol: level must be at least 2");
  using detail::Mat64;

  struct Label {
    SideKind kind;
    std::size_t partner;  // Free only
  };
  std::vector<Cusp> v{{-1, 0}, {0, 1}, {1, 1}, {1, 0}};
  std::vector<std::optional<Label>> labels(3);

  auto side = [&](std::size_t k) -> Mat64 { return {v[k + 1].p, v[k].p, v[k + 1].q, v[k].q}; };

  auto try_pair = [&](std::size_t k) {
    const Mat64 m = side(k);
    if (detail::in_gamma0(m * detail::kS * m.inverse(), level)) {
      labels[k] = Label{SideKind::Even, 0};
      return true;
    }
    if (detail::in_gamma0(m * detail::kUinv * m.inverse(), level)) {
      labels[k] = Label{SideKind::Odd, 0};
      return true;
    }
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (j == k || labels[j]) continue;
      const std::size_t later = std::max(j, k), earlier = std::min(j, k);
      if (detail::in_gamma0(side(later) * detail::kS * side(earlier).inverse(), level)) {
        labels[k] = Label{SideKind::Free, j};
        labels[j] = Label{SideKind::Free, k};
        return true;
      }
    }
    return false;
  };

  const std::int64_t target_index = index_gamma0(level);
  for (;;) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < labels.size(); ++k) {
        if (!labels[k] && try_pair(k)) changed = true;
      }
    }
    std::vector<std::size_t> open;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (!labels[k]) open.push_back(k);
    }
    if (open.empty()) break;

    std::size_t k = open.front();
    if (order == SubdivisionOrder::Rightmost) {
      k = open.back();
    } else if (order == SubdivisionOrder::SmallestMediant) {
      for (std::size_t j : open) {
        if (v[j].q + v[j + 1].q < v[k].q + v[k + 1].q) k = j;
      }
    }
    const Cusp mediant{v[k].p + v[k + 1].p, v[k].q + v[k + 1].q};
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(k) + 1, mediant);
    labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(k) + 1, std::nullopt);
    for (auto& l : labels) {
      if (l && l->kind == SideKind::Free && l->partner > k) ++l->partner;
    }
    // Each triangle covers three copies of the standard domain.
    if (3 * static_cast<std::int64_t>(v.size() - 3) > target_index)
      throw InternalError("farey_symbol: polygon exceeded the index of Gamma0(" +
                          std::to_string(level) + ")");
  }

  std::vector<SidePairing> pairings(labels.size());
  std::size_t next_id = 0;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const Label& l = *labels[k];
    if (l.kind != SideKind::Free) {
      pairings[k] = SidePairing{l.kind, 0};
    } else if (l.partner > k) {
      pairings[k] = SidePairing{SideKind::Free, next_id};
      pairings[l.partner] = SidePairing{SideKind::Free, next_id};
      ++next_id;
    }
  }
  return FareySymbol(level, std::move(v), std::move(pairings));
}

}  // namespace gamma0
