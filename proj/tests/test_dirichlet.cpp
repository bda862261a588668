#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <set>

#include "gamma0/dirichlet.hpp"

using namespace gamma0;

TEST(UnitGroup, SpecStructures) {
  const auto g7 = unit_group_structure(7);
  ASSERT_EQ(g7->factors().size(), 1u);
  EXPECT_EQ(g7->factors()[0].generator, 3);
  EXPECT_EQ(g7->factors()[0].order, 6);

  const auto g8 = unit_group_structure(8);
  ASSERT_EQ(g8->factors().size(), 2u);
  EXPECT_EQ(g8->factors()[0].generator, 7);
  EXPECT_EQ(g8->factors()[0].order, 2);
  EXPECT_EQ(g8->factors()[1].generator, 5);
  EXPECT_EQ(g8->factors()[1].order, 2);

  const auto g1 = unit_group_structure(1);
  EXPECT_TRUE(g1->factors().empty());
  EXPECT_EQ(g1->order(), 1);
  EXPECT_EQ(euler_phi(1), 1);
}

TEST(UnitGroup, GeneratorsHaveStatedOrdersAndProductIsPhi) {
  for (std::int64_t n = 1; n <= 400; ++n) {
    const auto g = unit_group_structure(n);
    std::int64_t prod = 1;
    for (const auto& f : g->factors()) {
      ASSERT_EQ(detail::multiplicative_order(f.generator, n), f.order) << n;
      prod *= f.order;
    }
    ASSERT_EQ(prod, euler_phi(n)) << n;
  }
}

TEST(UnitGroup, DiscreteLogRoundTrip) {
  for (std::int64_t n : {2, 9, 16, 20, 24, 63, 97, 120, 240}) {
    const auto g = unit_group_structure(n);
    for (std::int64_t u = -n; u < 2 * n; ++u) {
      if (std::gcd(u, n) != 1) {
        EXPECT_THROW(g->dlog(u), DomainError);
        continue;
      }
      const auto& e = g->dlog(u);
      std::int64_t x = 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::int64_t k = 0; k < e[i]; ++k) x = detail::mulmod(x, g->factors()[i].generator, n);
      }
      ASSERT_EQ(x, ((u % n) + n) % n) << u << " mod " << n;
    }
  }
}

TEST(DirichletCharacter, Counts) {
  EXPECT_EQ(enumerate_characters(7).size(), 6u);
  EXPECT_EQ(enumerate_characters(12).size(), 4u);
  EXPECT_EQ(enumerate_characters(1).size(), 1u);
}

TEST(DirichletCharacter, IdsAreStableAndDistinct) {
  for (std::int64_t n : {1, 5, 8, 15, 36}) {
    const auto chars = enumerate_characters(n);
    std::set<std::int64_t> ids;
    for (std::size_t i = 0; i < chars.size(); ++i) {
      EXPECT_EQ(chars[i].id(), static_cast<std::int64_t>(i));
      EXPECT_EQ(DirichletCharacter::from_id(n, chars[i].id()), chars[i]);
      ids.insert(chars[i].id());
    }
    EXPECT_EQ(ids.size(), chars.size());
    EXPECT_TRUE(chars[0].is_principal());
  }
  EXPECT_THROW(DirichletCharacter::from_id(7, 6), DomainError);
  EXPECT_THROW(DirichletCharacter::from_id(7, -1), DomainError);
}

TEST(DirichletCharacter, SpecValues) {
  const auto principal = DirichletCharacter::principal(7);
  for (std::int64_t d = 1; d < 7; ++d) EXPECT_TRUE(evaluate(principal, d).is_zero());
  // the character sending 3 to e(1/3) sends 5 = 3^5 to e(5/3) = e(2/3)
  for (const auto& chi : enumerate_characters(7)) {
    if (evaluate(chi, 3).str() != "1/3") continue;
    EXPECT_EQ(evaluate(chi, 5).str(), "2/3");
  }
  EXPECT_THROW(evaluate(principal, 14), DomainError);
}

TEST(DirichletCharacter, Multiplicative) {
  for (std::int64_t n : {5, 8, 12, 21, 45, 64}) {
    for (const auto& chi : enumerate_characters(n)) {
      for (std::int64_t x = 1; x < n; ++x) {
        if (std::gcd(x, n) != 1) continue;
        for (std::int64_t y = 1; y < n; ++y) {
          if (std::gcd(y, n) != 1) continue;
          ASSERT_EQ(evaluate(chi, x * y), evaluate(chi, x) + evaluate(chi, y));
        }
      }
    }
  }
}

TEST(DirichletCharacter, GroupLawAndOrthogonality) {
  for (std::int64_t n : {9, 16, 35}) {
    const auto chars = enumerate_characters(n);
    for (const auto& a : chars) {
      for (const auto& b : chars) {
        const auto ab = a * b;
        for (std::int64_t x = 1; x < n; ++x) {
          if (std::gcd(x, n) != 1) continue;
          ASSERT_EQ(evaluate(ab, x), evaluate(a, x) + evaluate(b, x));
        }
      }
      // a non-principal character is nontrivial somewhere; the principal one nowhere
      bool trivial_everywhere = true;
      for (std::int64_t x = 1; x < n; ++x) {
        if (std::gcd(x, n) == 1 && !evaluate(a, x).is_zero()) trivial_everywhere = false;
      }
      EXPECT_EQ(trivial_everywhere, a.is_principal());
    }
    // value tables are pairwise distinct
    std::set<std::vector<std::string>> tables;
    for (const auto& a : chars) {
      std::vector<std::string> t;
      for (std::int64_t x = 1; x < n; ++x) {
        if (std::gcd(x, n) == 1) t.push_back(evaluate(a, x).str());
      }
      tables.insert(t);
    }
    EXPECT_EQ(tables.size(), chars.size());
  }
}
