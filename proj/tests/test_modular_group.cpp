#include <gtest/gtest.h>

#include <array>

#include "gamma0/dedekind.hpp"
#include "gamma0/modular_group.hpp"
#include "gamma0/random.hpp"

using namespace gamma0;

namespace {

const UniModular T = UniModular::T();
const UniModular S = UniModular::S();
const UniModular I = UniModular::identity();
const UniModular minusI = UniModular::minus_identity();

// Four-case formula evaluated in rationals with the naive Dedekind sum.
Rational psi_oracle(const UniModular& g) {
  const Integer& a = g.a();
  const Integer& b = g.b();
  const Integer& c = g.c();
  const Integer& d = g.d();
  if (c > 0) return Rational(Integer(a + d), c) + Rational(12) * dedekind_sum(Integer(-d), c) - Rational(3);
  if (c < 0) return Rational(Integer(a + d), c) + Rational(12) * dedekind_sum(d, Integer(-c)) + Rational(3);
  if (a > 0) return Rational(b);
  return Rational(Integer(-b - 6));
}

}  // namespace

TEST(UniModular, Products) {
  EXPECT_EQ(T * T, UniModular(1, 2, 0, 1));
  EXPECT_EQ(S * S, minusI);
  const UniModular g(-2, 1, -7, 3);
  EXPECT_EQ(multiply(g, invert(g)), I);
  EXPECT_EQ(T.pow(-3), UniModular(1, -3, 0, 1));
  EXPECT_EQ(S.pow(4), I);
}

TEST(UniModular, Inverses) {
  EXPECT_EQ(invert(S), UniModular(0, 1, -1, 0));
  EXPECT_EQ(invert(T), UniModular(1, -1, 0, 1));
  EXPECT_EQ(invert(minusI), minusI);
}

TEST(UniModular, RejectsNonUnimodular) {
  EXPECT_THROW(UniModular(1, 1, 1, 1), DomainError);
  EXPECT_THROW(UniModular(2, 0, 0, 1), DomainError);
}

TEST(Psi, SpecValues) {
  EXPECT_EQ(psi(T), 1);
  EXPECT_EQ(psi(S), -3);
  EXPECT_EQ(psi(UniModular(-2, 1, -7, 3)), 2);
  EXPECT_EQ(psi(UniModular(-4, 3, -7, 5)), 2);
  EXPECT_EQ(psi(minusI), -6);
  EXPECT_EQ(psi(I), 0);
}

TEST(Psi, MatchesRationalOracle) {
  Rng rng(7);
  for (int i = 0; i < 3000; ++i) {
    const UniModular g = random_sl2z(rng);
    const Rational expected = psi_oracle(g);
    ASSERT_TRUE(expected.is_integer()) << g;
    ASSERT_EQ(Rational(psi(g)), expected) << g;
  }
}

TEST(Omega, SpecValues) {
  EXPECT_EQ(omega(S, S), 0);
  EXPECT_EQ(omega(minusI, minusI), 12);
  EXPECT_EQ(omega(invert(S), invert(S)), -12);
  EXPECT_EQ(psi(minusI), psi(S) + psi(S) + omega(S, S));
  EXPECT_EQ(psi(I), psi(minusI) + psi(minusI) + omega(minusI, minusI));
  EXPECT_EQ(psi(minusI), psi(invert(S)) * 2 + omega(invert(S), invert(S)));
}

TEST(Omega, CompositionLawOnRandomPairs) {
  Rng rng(2024);
  std::array<int, 3> hits{};
  for (int i = 0; i < 20000; ++i) {
    const UniModular x = random_sl2z(rng);
    const UniModular y = random_sl2z(rng);
    const int w = omega(x, y);
    ASSERT_EQ(psi(x * y), psi(x) + psi(y) + w) << x << " " << y;
    ++hits[w == -12 ? 0 : (w == 0 ? 1 : 2)];
  }
  for (int h : hits) EXPECT_GT(h, 0);
}

TEST(Psi, HomomorphismModTwelve) {
  Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    const UniModular x = random_sl2z(rng);
    const UniModular y = random_sl2z(rng);
    const Integer diff = psi(x * y) - psi(x) - psi(y);
    ASSERT_EQ(mod_floor(diff, Integer(12)), 0);
  }
}

TEST(ChiT, SpecValues) {
  EXPECT_TRUE(chi_t(0, S).is_zero());
  EXPECT_TRUE(chi_t(0, UniModular(-2, 1, -7, 3)).is_zero());
  EXPECT_EQ(chi_t(1, T).str(), "1/12");
  EXPECT_EQ(chi_t(6, S).str(), "1/2");
}

TEST(ChiT, Multiplicative) {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const UniModular x = random_sl2z(rng);
    const UniModular y = random_sl2z(rng);
    for (int t = 0; t < 12; ++t) ASSERT_EQ(chi_t(t, x * y), chi_t(t, x) + chi_t(t, y));
  }
}

TEST(Gamma0Element, ChecksLevel) {
  EXPECT_NO_THROW(Gamma0Element(UniModular(-2, 1, -7, 3), 7));
  EXPECT_THROW(Gamma0Element(UniModular(-2, 1, -7, 3), 5), DomainError);
  EXPECT_THROW(Gamma0Element(T, 4) * Gamma0Element(T, 2), DomainError);
  EXPECT_TRUE(in_gamma0(UniModular(3, -1, 4, -1), 4));
  EXPECT_FALSE(in_gamma0(S, 2));
}

TEST(Sigma, SpecValues) {
  for (std::int64_t n : {2, 6, 12, 30}) {
    for (std::int64_t l = 1; l <= n; ++l) {
      if (n % l != 0) continue;
      EXPECT_EQ(sigma_N_l(Gamma0Element(T, n), l), 1 - l);
      EXPECT_EQ(sigma_N_l(Gamma0Element(minusI, n), l), 0);
    }
  }
  EXPECT_EQ(sigma_N_l(Gamma0Element(UniModular(-2, 1, -7, 3), 7), 7), 0);
  EXPECT_EQ(sigma_N_l(Gamma0Element(UniModular(-4, 3, -7, 5), 7), 7), 0);
  EXPECT_THROW(sigma_N_l(Gamma0Element(T, 6), 4), DomainError);
}

TEST(Sigma, AdditiveOnGamma0) {
  // products of T^k and conjugates by elements of Gamma0(N)
  Rng rng(11);
  for (std::int64_t n : {4, 6, 9, 12}) {
    std::vector<UniModular> pool{T, UniModular(1, 0, n, 1), UniModular(1, 0, -n, 1)};
    auto draw = [&] {
      UniModular g;
      const auto len = rng.uniform(1, 12);
      for (std::int64_t i = 0; i < len; ++i) g = g * pool[static_cast<std::size_t>(rng.uniform(0, 2))];
      return rng.uniform(0, 1) ? g : -g;
    };
    for (int i = 0; i < 300; ++i) {
      const UniModular x = draw(), y = draw();
      for (std::int64_t l = 1; l <= n; ++l) {
        if (n % l != 0) continue;
        ASSERT_EQ(sigma_N_l(Gamma0Element(x * y, n), l),
                  sigma_N_l(Gamma0Element(x, n), l) + sigma_N_l(Gamma0Element(y, n), l));
      }
    }
  }
}
