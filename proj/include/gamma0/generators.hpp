#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamma0/farey.hpp"
#include "gamma0/integer.hpp"
#include "gamma0/modular_group.hpp"

namespace gamma0 {

enum class GeneratorKind { Free, Elliptic2, Elliptic3 };

struct GeneratorRef {
  GeneratorKind kind = GeneratorKind::Free;
  std::size_t index = 0;
  friend bool operator==(const GeneratorRef&, const GeneratorRef&) = default;
};

/// An independent generating set of Gamma0(N): free generators g_1..g_r, elliptic
/// generators with h^2 = -I or h^3 = -I, and the implicit -I.
struct GeneratorSet {
  std::int64_t level = 1;
  std::vector<UniModular> free;
  std::vector<UniModular> elliptic2;
  std::vector<UniModular> elliptic3;
  std::optional<FareySymbol> farey;  // absent for N = 1

  std::size_t r() const { return free.size(); }
  std::size_t e2() const { return elliptic2.size(); }
  std::size_t e3() const { return elliptic3.size(); }

  const UniModular& at(GeneratorRef ref) const {
    switch (ref.kind) {
      case GeneratorKind::Free:
        return free.at(ref.index);
      case GeneratorKind::Elliptic2:
        return elliptic2.at(ref.index);
      case GeneratorKind::Elliptic3:
        return elliptic3.at(ref.index);
    }
    throw InternalError("unreachable");
  }

  std::vector<GeneratorRef> refs() const {
    std::vector<GeneratorRef> out;
    for (std::size_t i = 0; i < free.size(); ++i) out.push_back({GeneratorKind::Free, i});
    for (std::size_t i = 0; i < elliptic2.size(); ++i) out.push_back({GeneratorKind::Elliptic2, i});
    for (std::size_t i = 0; i < elliptic3.size(); ++i) out.push_back({GeneratorKind::Elliptic3, i});
    return out;
  }
};

struct Letter {
  GeneratorRef gen;
  std::int64_t exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// gamma = sign * I * prod letters, in normal form: neighbours use distinct
/// generators, free exponents are nonzero, order-4 elliptics carry exponent 1 and
/// order-6 elliptics carry 1 or 2.
struct Word {
  int sign = 1;
  std::vector<Letter> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

/// Reads generators off the Farey symbol; N = 1 gives {S} and {ST}.
inline GeneratorSet generators_from_farey(const FareySymbol& fs) {
  GeneratorSet gs;
  gs.level = fs.level();
  gs.free.resize(fs.free_pair_count());
  for (std::size_t k = 0; k < fs.side_count(); ++k) {
    const SidePairing& s = fs.pairings()[k];
    switch (s.kind) {
      case SideKind::Even:
        gs.elliptic2.push_back(fs.pairing_matrix(k));
        break;
      case SideKind::Odd:
        gs.elliptic3.push_back(fs.pairing_matrix(k));
        break;
      case SideKind::Free:
        if (fs.partner(k) > k) gs.free[s.pair_id] = fs.pairing_matrix(k);
        break;
    }
  }
  gs.farey = fs;
  return gs;
}

inline GeneratorSet generators(std::int64_t level,
                               SubdivisionOrder order = SubdivisionOrder::SmallestMediant) {
  if (level < 1) throw DomainError("generators: level must be positive");
  if (level == 1) {
    GeneratorSet gs;
    gs.level = 1;
    gs.elliptic2.push_back(UniModular::S());
    gs.elliptic3.push_back(UniModular::S() * UniModular::T());
    return gs;
  }
  return generators_from_farey(farey_symbol(level, order));
}

inline UniModular reconstruct(const Word& w, const GeneratorSet& gs) {
  UniModular acc = w.sign < 0 ? UniModular::minus_identity() : UniModular::identity();
  for (const Letter& l : w.letters) acc *= gs.at(l.gen).pow(l.exponent);
  return acc;
}

inline std::int64_t exponent_sum(const Word& w, GeneratorRef g) {
  std::int64_t total = 0;
  for (const Letter& l : w.letters) {
    if (l.gen == g) total += l.exponent;
  }
  return total;
}

namespace detail {

/// Appends letters while keeping the word in normal form, using h^2 = -I for
/// order-4 elliptics and h^3 = -I for order-6 elliptics.
class WordBuilder {
 public:
  void flip_sign() { sign_ = -sign_; }

  void push(GeneratorRef gen, std::int64_t exponent) {
    exponent = canonical(gen.kind, exponent);
    if (exponent == 0) return;
    if (!letters_.empty() && letters_.back().gen == gen) {
      const std::int64_t merged = canonical(gen.kind, letters_.back().exponent + exponent);
      letters_.pop_back();
      if (merged != 0) letters_.push_back({gen, merged});
      return;
    }
    letters_.push_back({gen, exponent});
  }

  Word finish(int trailing_sign) && {
    return Word{sign_ * trailing_sign, std::move(letters_)};
  }

 private:
  // Reduces the exponent to its canonical range, moving powers of -I into the sign.
  std::int64_t canonical(GeneratorKind kind, std::int64_t e) {
    if (kind == GeneratorKind::Free) return e;
    const std::int64_t m = kind == GeneratorKind::Elliptic2 ? 2 : 3;
    std::int64_t q = e / m, r = e % m;
    if (r < 0) {
      r += m;
      --q;
    }
    if (q % 2 != 0) flip_sign();
    return r;
  }

  int sign_ = 1;
  std::vector<Letter> letters_;
};

/// Position of a cusp p/q relative to the polygon's boundary arcs.
struct ArcLocation {
  bool interior = false;  // strictly inside the arc of `side`
  std::size_t side = 0;
};

inline int compare_cusp(const Integer& p, const Integer& q, const Cusp& v) {
  // q > 0 and v.q > 0
  const Integer lhs = p * v.q, rhs = Integer(v.p) * q;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline ArcLocation locate(const FareySymbol& fs, Integer p, Integer q) {
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) return {};  // infinity is a vertex
  const auto& v = fs.vertices();
  const std::size_t last = v.size() - 2;  // index of the largest finite vertex
  if (compare_cusp(p, q, v[1]) < 0) return {true, 0};
  if (compare_cusp(p, q, v[last]) > 0) return {true, last};
  std::size_t lo = 1, hi = last;  // v[lo] <= c <= v[hi]
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    const int cmp = compare_cusp(p, q, v[mid]);
    if (cmp == 0) return {};
    (cmp < 0 ? hi : lo) = mid;
  }
  if (compare_cusp(p, q, v[lo]) == 0 || compare_cusp(p, q, v[hi]) == 0) return {};
  return {true, lo};
}

inline Word decompose_level_one(const UniModular& gamma) {
  // Euclid with T^-q and S^-1 on the left reduces gamma to +-T^m; then
  // T = -S (ST) and T^-1 = -(ST)^2 S.
  const GeneratorRef s{GeneratorKind::Elliptic2, 0};
  const GeneratorRef st{GeneratorKind::Elliptic3, 0};
  std::vector<std::pair<char, Integer>> steps;  // ('T', q) or ('S', 1): gamma = prod steps
  UniModular g = gamma;
  while (g.c() != 0) {
    const Integer q = floor_div(g.a(), g.c());
    if (q != 0) {
      g = UniModular(g.a() - q * g.c(), g.b() - q * g.d(), g.c(), g.d());
      steps.emplace_back('T', q);
    }
    g = UniModular(g.c(), g.d(), -g.a(), -g.b());  // S^-1 g
    steps.emplace_back('S', 1);
  }
  // g = +-T^b now.
  const int sign = g.a() > 0 ? 1 : -1;
  const Integer tail = sign > 0 ? g.b() : Integer(-g.b());
  if (tail != 0) steps.emplace_back('T', tail);

  WordBuilder wb;
  for (const auto& [kind, count] : steps) {
    if (kind == 'S') {
      wb.push(s, 1);
      continue;
    }
    const std::int64_t n = to_int64(count);
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) {
      wb.flip_sign();
      if (n > 0) {
        wb.push(s, 1);
        wb.push(st, 1);
      } else {
        wb.push(st, 2);
        wb.push(s, 1);
      }
    }
  }
  return std::move(wb).finish(sign);
}

}  // namespace detail

/// Normal form of gamma over the generating set.
///
/// The Farey triangle gamma(0, 1, infinity) is walked back into the polygon: while it
/// lies beyond a boundary side, the pairing of that side (or, past an odd side, the
/// right power of its rotation) is applied on the left. Each move shortens the path
/// from the polygon to the triangle in the dual tree of the Farey tessellation.
inline Word decompose(const Gamma0Element& gamma, const GeneratorSet& gs) {
  if (gamma.level() != gs.level) {
    throw DomainError("decompose: element of level " + std::to_string(gamma.level()) +
                      " with generators of level " + std::to_string(gs.level));
  }
  if (gs.level == 1) return detail::decompose_level_one(gamma.matrix());
  const FareySymbol& fs = *gs.farey;

  std::vector<std::size_t> elliptic_index(fs.side_count());
  {
    std::size_t n2 = 0, n3 = 0;
    for (std::size_t k = 0; k < fs.side_count(); ++k) {
      if (fs.pairings()[k].kind == SideKind::Even) elliptic_index[k] = n2++;
      if (fs.pairings()[k].kind == SideKind::Odd) elliptic_index[k] = n3++;
    }
  }

  detail::WordBuilder wb;
  UniModular g = gamma.matrix();
  for (std::uint64_t steps = 0;; ++steps) {
    if (steps > 100'000'000) throw InternalError("decompose: no progress on " + gamma.matrix().str());
    const Integer cusps[3][2] = {{g.a(), g.c()}, {g.b(), g.d()}, {g.a() + g.b(), g.c() + g.d()}};
    std::optional<std::size_t> side;
    for (const auto& c : cusps) {
      const auto loc = detail::locate(fs, c[0], c[1]);
      if (loc.interior) {
        side = loc.side;
        break;
      }
    }
    if (!side) break;

    const std::size_t k = *side;
    const SidePairing& label = fs.pairings()[k];
    switch (label.kind) {
      case SideKind::Free: {
        const GeneratorRef ref{GeneratorKind::Free, label.pair_id};
        const UniModular& pair = gs.free[label.pair_id];
        // The pair matrix carries the earlier side onto the later one.
        if (fs.partner(k) < k) {
          g = pair.inverse() * g;
          wb.push(ref, 1);
        } else {
          g = pair * g;
          wb.push(ref, -1);
        }
        break;
      }
      case SideKind::Even: {
        const UniModular& h = gs.elliptic2[elliptic_index[k]];
        g = h.inverse() * g;
        wb.push({GeneratorKind::Elliptic2, elliptic_index[k]}, 1);
        break;
      }
      case SideKind::Odd: {
        const UniModular& rho = gs.elliptic3[elliptic_index[k]];
        if (k == 0 || k + 1 == fs.side_count())
          throw InternalError("decompose: odd pairing on an infinite side");
        const Cusp& lo = fs.vertices()[k];
        const Cusp& hi = fs.vertices()[k + 1];
        const Cusp mid{lo.p + hi.p, lo.q + hi.q};
        // rho maps (lo, hi) -> (lo, mid) -> (mid, hi).
        int branch = 0;
        for (const auto& c : cusps) {
          Integer p = c[0], q = c[1];
          if (q < 0) {
            p = -p;
            q = -q;
          }
          if (q == 0) continue;
          const int cmp = detail::compare_cusp(p, q, mid);
          if (cmp == 0) continue;
          branch = cmp < 0 ? 1 : 2;
          break;
        }
        if (branch == 0) throw InternalError("decompose: landed on an odd triangle");
        g = rho.pow(-branch) * g;
        wb.push({GeneratorKind::Elliptic3, elliptic_index[k]}, branch);
        break;
      }
    }
  }
  if (!g.is_plus_minus_identity())
    throw InternalError("decompose: reduction of " + gamma.matrix().str() + " stopped at " + g.str());
  return std::move(wb).finish(g.a() > 0 ? 1 : -1);
}

}  // namespace gamma0
