#pragma once

#include <cstdint>
#include <algorithm>
#include <map>
#include <optional>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gamma0/integer.hpp"
#include "gamma0/rational.hpp"

namespace gamma0 {

namespace detail {

inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::int64_t multiplicative_order(std::int64_t g, std::int64_t m) {
  std::int64_t x = g % m, k = 1;
  while (x != 1 % m) {
    x = mulmod(x, g, m);
    ++k;
  }
  return k;
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

/// x = r mod m and x = 1 mod n/m, for coprime m and n/m; result in [0, n).
inline std::int64_t crt_lift(std::int64_t r, std::int64_t m, std::int64_t n) {
  const std::int64_t rest = n / m;
  for (std::int64_t x = r % m; x < n; x += m) {
    if (x % rest == 1 % rest) return x;
  }
  throw InternalError("crt_lift failed");
}

}  // namespace detail

using detail::euler_phi;

/// (Z/NZ)^x as a product of cyclic factors, with a discrete-log table.
///
/// Factors come per prime power in increasing order of p: the smallest primitive
/// root for odd p^k, -1 for 4, and -1 then 5 for 2^k with k >= 3, each lifted to
/// the unit that is 1 modulo the other prime powers.
class UnitGroupStructure {
 public:
  struct Factor {
    std::int64_t generator;
    std::int64_t order;
  };

  explicit UnitGroupStructure(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 1) throw DomainError("unit group: modulus must be positive");
    for (const auto& [p, e] : detail::factorize(modulus)) {
      std::int64_t pk = 1;
      for (int i = 0; i < e; ++i) pk *= p;
      if (p == 2) {
        if (e >= 2) add_factor(detail::crt_lift(pk - 1, pk, modulus), 2);
        if (e >= 3) add_factor(detail::crt_lift(5, pk, modulus), pk / 4);
        continue;
      }
      const std::int64_t phi = pk / p * (p - 1);
      std::int64_t g = 2;
      while (detail::multiplicative_order(g, pk) != phi) ++g;
      add_factor(detail::crt_lift(g, pk, modulus), phi);
    }
    build_log_table();
  }

  std::int64_t modulus() const { return modulus_; }
  const std::vector<Factor>& factors() const { return factors_; }
  std::int64_t order() const {
    std::int64_t n = 1;
    for (const auto& f : factors_) n *= f.order;
    return n;
  }

  /// Exponent vector of a unit d against the factors.
  const std::vector<std::int64_t>& dlog(const Integer& d) const {
    const std::int64_t r = mod_floor(d, modulus_).convert_to<std::int64_t>();
    const auto& entry = log_table_[static_cast<std::size_t>(r)];
    if (!entry)
      throw DomainError("dlog: " + d.str() + " is not a unit mod " + std::to_string(modulus_));
    return *entry;
  }

 private:
  void add_factor(std::int64_t g, std::int64_t order) {
    if (order > 1) factors_.push_back({g, order});
  }

  void build_log_table() {
    log_table_.assign(static_cast<std::size_t>(modulus_), std::nullopt);
    std::vector<std::int64_t> exps(factors_.size(), 0);
    const std::int64_t total = order();
    for (std::int64_t idx = 0; idx < total; ++idx) {
      std::int64_t x = 1 % modulus_;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        for (std::int64_t j = 0; j < exps[i]; ++j) x = detail::mulmod(x, factors_[i].generator, modulus_);
      }
      auto& slot = log_table_[static_cast<std::size_t>(x)];
      if (slot) throw InternalError("unit group: generators are not independent");
      slot = exps;
      for (std::size_t i = 0; i < exps.size(); ++i) {
        if (++exps[i] < factors_[i].order) break;
        exps[i] = 0;
      }
    }
  }

  std::int64_t modulus_;
  std::vector<Factor> factors_;
  std::vector<std::optional<std::vector<std::int64_t>>> log_table_;
};

/// Memoized per modulus; safe to call concurrently.
inline std::shared_ptr<const UnitGroupStructure> unit_group_structure(std::int64_t modulus) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const UnitGroupStructure>> memo;
  std::lock_guard lock(mu);
  auto& slot = memo[modulus];
  if (!slot) slot = std::make_shared<const UnitGroupStructure>(modulus);
  return slot;
}

/// A Dirichlet character mod N: chi(g_i) = e(k_i / n_i) on the structure's factors.
class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group, std::vector<std::int64_t> exponents)
      : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& f = group_->factors();
    if (exponents_.size() != f.size()) throw DomainError("character: wrong number of exponents");
    for (std::size_t i = 0; i < f.size(); ++i) {
      exponents_[i] %= f[i].order;
      if (exponents_[i] < 0) exponents_[i] += f[i].order;
    }
  }

  static DirichletCharacter principal(std::int64_t modulus) {
    auto g = unit_group_structure(modulus);
    const std::size_t n = g->factors().size();
    return DirichletCharacter(std::move(g), std::vector<std::int64_t>(n, 0));
  }

  /// Character with the given mixed-radix id (the first factor is the least significant digit).
  static DirichletCharacter from_id(std::int64_t modulus, std::int64_t id) {
    auto g = unit_group_structure(modulus);
    if (id < 0 || id >= g->order())
      throw DomainError("character id " + std::to_string(id) + " out of range for modulus " +
                        std::to_string(modulus));
    std::vector<std::int64_t> exps;
    for (const auto& f : g->factors()) {
      exps.push_back(id % f.order);
      id /= f.order;
    }
    return DirichletCharacter(std::move(g), std::move(exps));
  }

  std::int64_t modulus() const { return group_->modulus(); }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  const UnitGroupStructure& group() const { return *group_; }

  std::int64_t id() const {
    std::int64_t id = 0, radix = 1;
    const auto& f = group_->factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
      id += exponents_[i] * radix;
      radix *= f[i].order;
    }
    return id;
  }

  bool is_principal() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](std::int64_t e) { return e == 0; });
  }

  /// Pointwise product of characters (exponents add).
  friend DirichletCharacter operator*(const DirichletCharacter& x, const DirichletCharacter& y) {
    if (x.modulus() != y.modulus()) throw DomainError("character product: modulus mismatch");
    std::vector<std::int64_t> e(x.exponents_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = x.exponents_[i] + y.exponents_[i];
    return DirichletCharacter(x.group_, std::move(e));
  }

  friend bool operator==(const DirichletCharacter& x, const DirichletCharacter& y) {
    return x.modulus() == y.modulus() && x.exponents_ == y.exponents_;
  }

 private:
  std::shared_ptr<const UnitGroupStructure> group_;
  std::vector<std::int64_t> exponents_;
};

/// All phi(N) characters in id order; the principal character comes first.
inline std::vector<DirichletCharacter> enumerate_characters(std::int64_t modulus) {
  const auto g = unit_group_structure(modulus);
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(g->order()));
  for (std::int64_t id = 0; id < g->order(); ++id) out.push_back(DirichletCharacter::from_id(modulus, id));
  return out;
}

/// chi(d) as an exponent: sum_i dlog_i(d) k_i / n_i mod 1. d must be a unit mod N.
inline CircleExponent evaluate(const DirichletCharacter& chi, const Integer& d) {
  const auto& logs = chi.group().dlog(d);
  const auto& f = chi.group().factors();
  Rational total;
  for (std::size_t i = 0; i < f.size(); ++i) {
    total += Rational(Integer(logs[i]) * chi.exponents()[i], f[i].order);
  }
  return CircleExponent(total);
}

}  // namespace gamma0
