#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gamma0/dedekind.hpp"
#include "gamma0/dirichlet.hpp"
#include "gamma0/generators.hpp"
#include "gamma0/linalg.hpp"
#include "gamma0/modular_group.hpp"
#include "gamma0/rational.hpp"
#include "gamma0/registry.hpp"

namespace gamma0 {

/// Positive divisors of n in increasing order.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Divisors l of n with l > 1; these index the continuous parameters.
inline std::vector<std::int64_t> nontrivial_divisors(std::int64_t n) {
  auto d = divisors(n);
  d.erase(d.begin());
  return d;
}

/// (chi, r1, (r_l)_{1 < l | N}). r1 is kept in [0, 12); the r_l are rationals.
struct CharacterParams {
  DirichletCharacter chi;
  std::int64_t r1 = 0;
  std::map<std::int64_t, Rational> r_l;

  CharacterParams(DirichletCharacter c, std::int64_t r1_in, std::map<std::int64_t, Rational> rl = {})
      : chi(std::move(c)), r1(((r1_in % 12) + 12) % 12), r_l(std::move(rl)) {
    const std::int64_t n = chi.modulus();
    for (const auto& [l, v] : r_l) {
      if (l <= 1 || n % l != 0)
        throw DomainError("r_l given for l = " + std::to_string(l) + ", not a divisor > 1 of " +
                          std::to_string(n));
    }
    for (std::int64_t l : nontrivial_divisors(n)) r_l.try_emplace(l, Rational());
  }

  std::int64_t level() const { return chi.modulus(); }

  static CharacterParams trivial(std::int64_t level) {
    return CharacterParams(DirichletCharacter::principal(level), 0);
  }
};

/// Pointwise product of the characters with parameters p and q.
inline CharacterParams compose(const CharacterParams& p, const CharacterParams& q) {
  std::map<std::int64_t, Rational> rl = p.r_l;
  for (const auto& [l, v] : q.r_l) rl[l] += v;
  return CharacterParams(p.chi * q.chi, p.r1 + q.r1, std::move(rl));
}

/// chi(d) e(r1 Psi(gamma) / 12 + sum_l r_l sigma_{N,l}(gamma)).
inline CircleExponent eval_character(const CharacterParams& params, const Gamma0Element& g) {
  if (params.level() != g.level()) {
    throw DomainError("eval_character: parameters of level " + std::to_string(params.level()) +
                      " applied to an element of level " + std::to_string(g.level()));
  }
  const Integer psi_g = psi(g.matrix());
  Rational total = evaluate(params.chi, g.matrix().d()).value();
  total += Rational(Integer(params.r1) * psi_g, 12);
  for (const auto& [l, v] : params.r_l) {
    if (v.is_zero()) continue;
    total += v * Rational(sigma_N_l(g, l, psi_g));
  }
  return CircleExponent(total);
}

/// (sigma_{N,l}(g_j)) with one row per free generator and one column per l.
struct SigmaMatrix {
  std::int64_t level = 0;
  std::vector<std::int64_t> columns;  // the l values
  IntMatrix entries;
};

inline SigmaMatrix sigma_matrix(const GeneratorSet& gs) {
  SigmaMatrix sm;
  sm.level = gs.level;
  sm.columns = nontrivial_divisors(gs.level);
  sm.entries = IntMatrix(gs.r(), sm.columns.size());
  for (std::size_t j = 0; j < gs.r(); ++j) {
    const Gamma0Element g(gs.free[j], gs.level);
    for (std::size_t c = 0; c < sm.columns.size(); ++c) sm.entries(j, c) = sigma_N_l(g, sm.columns[c]);
  }
  return sm;
}

/// beta(N, l): the positive generator of the image of sigma_{N,l}.
inline Integer beta(const GeneratorSet& gs, std::int64_t l) {
  const std::int64_t n = gs.level;
  if (n < 2 || l <= 1 || n % l != 0)
    throw DomainError("beta: need 1 < l | N, got N = " + std::to_string(n) + ", l = " + std::to_string(l));
  std::vector<Integer> values;
  for (const auto& g : gs.free) values.push_back(sigma_N_l(Gamma0Element(g, n), l));
  Integer b = gcd_all(values);
  if (b == 0) throw InternalError("beta: sigma vanishes on all free generators of level " + std::to_string(n));
  return b;
}

// ---------------------------------------------------------------------------
// Surjectivity

enum class Verdict { Surjective, NotSurjective, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Surjective:
      return "Surjective";
    case Verdict::NotSurjective:
      return "NotSurjective";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "?";
}

/// Values of a character on -I and the elliptic generators, in units of 1/12.
using TorsionTuple = std::vector<int>;

struct SurjectivityReport {
  std::int64_t level = 0;
  Verdict verdict = Verdict::Unknown;
  std::string reason;
  std::size_t r = 0, e2 = 0, e3 = 0;
  std::size_t t = 0;  // number of divisors
  std::size_t rank = 0;
  bool r_exceeds_t_minus_1 = false;
  std::int64_t character_pairs = 0;  // |characters mod N| * 12
  std::int64_t torsion_total = 0;    // 2^(e2+1) 3^e3
  std::int64_t torsion_hit = 0;
  std::optional<TorsionTuple> missing_torsion;  // a tuple no (chi, r1) reaches
  // For each free generator g_j, rationals (r_l) with sum_l r_l sigma_{N,l}(g_i) = [i == j].
  std::vector<std::vector<Rational>> free_part_solutions;
};

namespace detail {

/// Value in units of 1/12 of chi(d) e(r1 Psi / 12) on a torsion element.
inline int torsion_value(const DirichletCharacter& chi, std::int64_t r1, const UniModular& h) {
  const Rational v = (evaluate(chi, h.d()) + CircleExponent(Rational(Integer(r1) * psi(h), 12))).value();
  const Rational twelfths = v * Rational(12);
  if (!twelfths.is_integer()) throw InternalError("torsion value outside (1/12)Z");
  return twelfths.numerator().convert_to<int>();
}

}  // namespace detail

/// Decides whether (chi, r1, r_l) -> characters of Gamma0(N) is onto.
///
/// It is onto iff (i) the sigma matrix has full row rank r, so the r_l reach any
/// values on the free generators, and (ii) the 12 phi(N) pairs (chi, r1) realize
/// every admissible assignment on -I and the elliptic generators (sigma vanishes
/// there, so the r_l cannot help).
inline SurjectivityReport verify_surjectivity(const GeneratorSet& gs) {
  SurjectivityReport rep;
  const std::int64_t n = gs.level;
  rep.level = n;
  rep.r = gs.r();
  rep.e2 = gs.e2();
  rep.e3 = gs.e3();
  rep.t = divisors(n).size();
  rep.r_exceeds_t_minus_1 = rep.r > rep.t - 1;

  const SigmaMatrix sm = sigma_matrix(gs);
  rep.rank = integer_rank(sm.entries);
  if (rep.rank == rep.r) {
    for (std::size_t j = 0; j < rep.r; ++j) {
      std::vector<Rational> target(rep.r);
      target[j] = 1;
      auto x = solve_rational(sm.entries, target);
      if (!x) throw InternalError("full-rank sigma system without solution");
      rep.free_part_solutions.push_back(std::move(*x));
    }
  }

  std::vector<UniModular> torsion{UniModular::minus_identity()};
  torsion.insert(torsion.end(), gs.elliptic2.begin(), gs.elliptic2.end());
  torsion.insert(torsion.end(), gs.elliptic3.begin(), gs.elliptic3.end());

  rep.torsion_total = 2;
  for (std::size_t i = 0; i < rep.e2; ++i) rep.torsion_total *= 2;
  for (std::size_t i = 0; i < rep.e3; ++i) rep.torsion_total *= 3;

  std::set<TorsionTuple> image;
  const auto characters = enumerate_characters(n);
  rep.character_pairs = 12 * static_cast<std::int64_t>(characters.size());
  for (const auto& chi : characters) {
    for (std::int64_t r1 = 0; r1 < 12; ++r1) {
      TorsionTuple tuple;
      for (const auto& h : torsion) tuple.push_back(detail::torsion_value(chi, r1, h));
      image.insert(std::move(tuple));
    }
  }
  // Every realized tuple must satisfy v(h)^m = v(-I).
  for (const auto& tuple : image) {
    for (std::size_t i = 1; i < tuple.size(); ++i) {
      const int m = i <= rep.e2 ? 2 : 3;
      if ((m * tuple[i]) % 12 != tuple[0]) throw InternalError("realized torsion tuple is not admissible");
    }
  }
  rep.torsion_hit = static_cast<std::int64_t>(image.size());

  if (rep.torsion_hit < rep.torsion_total) {
    // Walk admissible tuples in mixed radix until one is missing.
    const std::size_t len = torsion.size();
    std::vector<int> digit(len, 0);
    for (;;) {
      TorsionTuple tuple(len);
      tuple[0] = 6 * digit[0];
      for (std::size_t i = 1; i < len; ++i) {
        const int m = i <= rep.e2 ? 2 : 3;
        tuple[i] = (tuple[0] / m + digit[i] * (12 / m)) % 12;
      }
      if (!image.count(tuple)) {
        rep.missing_torsion = std::move(tuple);
        break;
      }
      std::size_t i = 0;
      for (; i < len; ++i) {
        const int base = i == 0 ? 2 : (i <= rep.e2 ? 2 : 3);
        if (++digit[i] < base) break;
        digit[i] = 0;
      }
      if (i == len) throw InternalError("torsion count mismatch without a missing tuple");
    }
  }

  const bool torsion_ok = rep.torsion_hit == rep.torsion_total;
  const bool rank_ok = rep.rank == rep.r;
  if (torsion_ok && rank_ok) {
    rep.verdict = Verdict::Surjective;
    rep.reason = "sigma matrix has full row rank and every torsion assignment is realized";
  } else {
    rep.verdict = Verdict::NotSurjective;
    if (!torsion_ok) {
      rep.reason = "some torsion assignment is not realized by any (chi, r1)";
    } else if (rep.r_exceeds_t_minus_1) {
      rep.reason = "r > t - 1: more free generators than continuous parameters";
    } else {
      rep.reason = "sigma matrix rank is below r";
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Kernel of sigma_{N,N} and the Dedekind-sum identity

inline constexpr std::array<std::int64_t, 8> kSingleSigmaLevels{2, 3, 4, 5, 7, 9, 13, 25};

inline bool is_single_sigma_level(std::int64_t n) {
  for (std::int64_t m : kSingleSigmaLevels) {
    if (m == n) return true;
  }
  return false;
}

/// The unique free generator with sigma_{N,N} != 0; throws if there is not exactly one.
inline std::size_t distinguished_generator(const GeneratorSet& gs) {
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < gs.r(); ++j) {
    if (sigma_N_l(Gamma0Element(gs.free[j], gs.level), gs.level) == 0) continue;
    if (found)
      throw DomainError("level " + std::to_string(gs.level) +
                        ": more than one free generator with nonzero sigma_{N,N}");
    found = j;
  }
  if (!found) throw DomainError("level " + std::to_string(gs.level) + ": sigma_{N,N} vanishes on generators");
  return *found;
}

struct KernelCheck {
  std::int64_t exponent_sum = 0;
  bool in_kernel = false;  // exponent_sum == 0
  Integer sigma;           // sigma_{N,N}(gamma)
};

/// Exponent sum of the distinguished generator in the normal form of gamma. At the
/// admissible levels this vanishes exactly when sigma_{N,N}(gamma) does.
inline KernelCheck kernel_exponent_check(const Gamma0Element& g, const GeneratorSet& gs) {
  if (!is_single_sigma_level(g.level()))
    throw DomainError("kernel check: level " + std::to_string(g.level()) + " is not in {2,3,4,5,7,9,13,25}");
  const std::size_t j = distinguished_generator(gs);
  const Word w = decompose(g, gs);
  KernelCheck kc;
  kc.exponent_sum = exponent_sum(w, {GeneratorKind::Free, j});
  kc.in_kernel = kc.exponent_sum == 0;
  kc.sigma = sigma_N_l(g, g.level());
  if (kc.in_kernel != (kc.sigma == 0)) {
    throw TheoremViolation("kernel criterion fails at " + g.matrix().str(),
                           "{\"matrix\": \"" + g.matrix().str() + "\", \"exponent_sum\": " +
                               std::to_string(kc.exponent_sum) + ", \"sigma\": \"" + kc.sigma.str() + "\"}");
  }
  return kc;
}

/// Q = ((a+d)/c - 12 s(d,c)) - ((a+d)/(c/N) - 12 s(d,c/N)) with a d = 1 mod c, returned
/// as Q / (N - 1); throws TheoremViolation if N - 1 does not divide Q.
inline Integer dedekind_identity_quotient(std::int64_t n, const Integer& c, const Integer& d) {
  if (!is_single_sigma_level(n))
    throw DomainError("dedekind identity: N = " + std::to_string(n) + " is not in {2,3,4,5,7,9,13,25}");
  if (c <= 0 || c % n != 0) throw DomainError("dedekind identity: need c > 0 with N | c");
  if (gcd(c, d) != 1) throw DomainError("dedekind identity: gcd(c, d) must be 1");
  const Integer a = mod_inverse(d, c);
  const Integer c_low = c / n;
  const Rational q = (Rational(a + d, c) - Rational(12) * dedekind_sum_fast(d, c)) -
                     (Rational(a + d, c_low) - Rational(12) * dedekind_sum_fast(d, c_low));
  if (!q.is_integer() || q.numerator() % (n - 1) != 0) {
    throw TheoremViolation("dedekind identity fails", "{\"N\": " + std::to_string(n) + ", \"c\": \"" +
                                                          c.str() + "\", \"d\": \"" + d.str() +
                                                          "\", \"Q\": \"" + q.str() + "\"}");
  }
  return q.numerator() / (n - 1);
}

}  // namespace gamma0
