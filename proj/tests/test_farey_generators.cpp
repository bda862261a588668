#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <set>
#include <utility>

#include "gamma0/farey.hpp"
#include "gamma0/generators.hpp"
#include "gamma0/random.hpp"

using namespace gamma0;

namespace {

// |P^1(Z/N)|: pairs (c : d) with gcd(c, d, N) = 1 up to units.
std::int64_t projective_line_size(std::int64_t n) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::int64_t classes = 0;
  for (std::int64_t c = 0; c < n; ++c) {
    for (std::int64_t d = 0; d < n; ++d) {
      if (std::gcd(std::gcd(c, d), n) != 1 || seen.count({c, d})) continue;
      ++classes;
      for (std::int64_t u = 1; u < n || (n == 1 && u == 1); ++u) {
        if (std::gcd(u, n) == 1) seen.insert({c * u % n, d * u % n});
        if (n == 1) break;
      }
    }
  }
  return classes;
}

std::int64_t roots_mod(std::int64_t n, std::int64_t b) {  // #{x : x^2 + b x + 1 = 0 mod n}
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < n; ++x) count += (x * x + b * x + 1) % n == 0;
  return count;
}

bool normal_form(const Word& w) {
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const Letter& l = w.letters[i];
    if (i > 0 && w.letters[i - 1].gen == l.gen) return false;
    switch (l.gen.kind) {
      case GeneratorKind::Free:
        if (l.exponent == 0) return false;
        break;
      case GeneratorKind::Elliptic2:
        if (l.exponent != 1) return false;
        break;
      case GeneratorKind::Elliptic3:
        if (l.exponent != 1 && l.exponent != 2) return false;
        break;
    }
  }
  return w.sign == 1 || w.sign == -1;
}

// A random word already in normal form.
Word random_normal_word(const GeneratorSet& gs, Rng& rng, int len) {
  const auto refs = gs.refs();
  Word w;
  w.sign = rng.uniform(0, 1) ? 1 : -1;
  for (int i = 0; i < len; ++i) {
    GeneratorRef g;
    do {
      g = refs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(refs.size()) - 1))];
    } while (!w.letters.empty() && w.letters.back().gen == g);
    std::int64_t e = 1;
    if (g.kind == GeneratorKind::Free) {
      do e = rng.uniform(-3, 3); while (e == 0);
    } else if (g.kind == GeneratorKind::Elliptic3) {
      e = rng.uniform(1, 2);
    }
    w.letters.push_back({g, e});
  }
  return w;
}

}  // namespace

TEST(IndexGamma0, SpecValues) {
  EXPECT_EQ(index_gamma0(1), 1);
  EXPECT_EQ(index_gamma0(6), 12);
  EXPECT_EQ(index_gamma0(13), 14);
}

TEST(IndexGamma0, MatchesProjectiveLineCount) {
  for (std::int64_t n = 1; n <= 60; ++n) ASSERT_EQ(index_gamma0(n), projective_line_size(n)) << n;
}

TEST(FareySymbol, SmallLevels) {
  const FareySymbol f2 = farey_symbol(2);
  EXPECT_EQ(f2.count(SideKind::Even), 1u);
  EXPECT_EQ(f2.count(SideKind::Odd), 0u);
  const FareySymbol f3 = farey_symbol(3);
  EXPECT_EQ(f3.count(SideKind::Even), 0u);
  EXPECT_EQ(f3.count(SideKind::Odd), 1u);
  const FareySymbol f4 = farey_symbol(4);
  EXPECT_EQ(f4.count(SideKind::Even), 0u);
  EXPECT_EQ(f4.count(SideKind::Odd), 0u);
  EXPECT_EQ(f4.free_pair_count(), 2u);
}

TEST(FareySymbol, InvariantsHold) {
  for (std::int64_t n = 2; n <= 300; ++n) {
    for (auto order : {SubdivisionOrder::SmallestMediant, SubdivisionOrder::Leftmost, SubdivisionOrder::Rightmost}) {
      if (order != SubdivisionOrder::SmallestMediant && n > 100) continue;
      const FareySymbol fs = farey_symbol(n, order);
      const auto& v = fs.vertices();
      // interior fractions are Farey neighbours
      for (std::size_t i = 1; i + 2 < v.size(); ++i) ASSERT_EQ(v[i + 1].p * v[i].q - v[i].p * v[i + 1].q, 1) << n;
      // area: 3 per triangle plus 1 per odd side
      ASSERT_EQ(static_cast<std::int64_t>(v.size() - 3) * 3 + static_cast<std::int64_t>(fs.count(SideKind::Odd)),
                index_gamma0(n))
          << n;
      for (std::size_t k = 0; k < fs.pairings().size(); ++k) {
        ASSERT_TRUE(in_gamma0(fs.pairing_matrix(k), n)) << n << " side " << k;
      }
    }
  }
}

TEST(FareySymbol, RejectsBrokenSymbols) {
  EXPECT_THROW(FareySymbol(2, {{-1, 0}, {0, 1}, {1, 0}}, {{SideKind::Free, 0}, {SideKind::Free, 1}}), DomainError);
  EXPECT_THROW(FareySymbol(4, {{-1, 0}, {0, 1}, {1, 2}, {1, 1}, {1, 0}},
                           {{SideKind::Free, 0}, {SideKind::Free, 0}, {SideKind::Free, 1}, {SideKind::Free, 1}}),
               DomainError);
}

TEST(Generators, TableCounts) {
  struct Row {
    std::int64_t n;
    std::size_t r, e2, e3;
  };
  for (const Row& row : {Row{2, 1, 1, 0}, Row{3, 1, 0, 1}, Row{4, 2, 0, 0}, Row{5, 1, 2, 0}, Row{6, 3, 0, 0},
                         Row{7, 1, 0, 2}, Row{8, 3, 0, 0}, Row{10, 3, 2, 0}, Row{12, 5, 0, 0}, Row{13, 1, 2, 2}}) {
    const GeneratorSet gs = generators(row.n);
    EXPECT_EQ(gs.r(), row.r) << row.n;
    EXPECT_EQ(gs.e2(), row.e2) << row.n;
    EXPECT_EQ(gs.e3(), row.e3) << row.n;
  }
}

TEST(Generators, LevelOne) {
  const GeneratorSet gs = generators(1);
  EXPECT_EQ(gs.r(), 0u);
  EXPECT_EQ(gs.e2(), 1u);
  EXPECT_EQ(gs.e3(), 1u);
  EXPECT_EQ(gs.elliptic2[0], UniModular::S());
}

TEST(Generators, MeasureFormulaAndEllipticCounts) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    const GeneratorSet gs = generators(n);
    ASSERT_EQ(static_cast<std::int64_t>(gs.e2()), roots_mod(n, 0)) << n;
    ASSERT_EQ(static_cast<std::int64_t>(gs.e3()), roots_mod(n, 1)) << n;
    // 6r = index + 6 - 3 e2 - 4 e3
    ASSERT_EQ(6 * static_cast<std::int64_t>(gs.r()),
              index_gamma0(n) + 6 - 3 * static_cast<std::int64_t>(gs.e2()) - 4 * static_cast<std::int64_t>(gs.e3()))
        << n;
  }
}

TEST(Generators, RelationsAndMembership) {
  const UniModular minusI = UniModular::minus_identity();
  for (std::int64_t n = 1; n <= 120; ++n) {
    const GeneratorSet gs = generators(n);
    for (const auto& h : gs.elliptic2) {
      ASSERT_EQ(h * h, minusI) << n;
      ASSERT_TRUE(in_gamma0(h, n));
    }
    for (const auto& h : gs.elliptic3) {
      ASSERT_EQ(h * h * h, minusI) << n;
      ASSERT_TRUE(in_gamma0(h, n));
    }
    for (const auto& g : gs.free) {
      ASSERT_TRUE(in_gamma0(g, n));
      ASSERT_FALSE(g.is_plus_minus_identity());
    }
    if (n > 1) EXPECT_EQ(gs.free.front(), UniModular::T()) << n;
  }
}

TEST(Decompose, SpecExamples) {
  for (std::int64_t n : {1, 2, 7, 13, 30}) {
    const GeneratorSet gs = generators(n);
    const Word wi = decompose(Gamma0Element(UniModular::minus_identity(), n), gs);
    EXPECT_EQ(wi.sign, -1);
    EXPECT_TRUE(wi.letters.empty());
    for (const auto& ref : gs.refs()) EXPECT_EQ(exponent_sum(wi, ref), 0);
    if (n == 1) continue;
    const GeneratorRef t{GeneratorKind::Free, 0};
    const Word wt = decompose(Gamma0Element(UniModular::T(), n), gs);
    EXPECT_EQ(wt.sign, 1);
    ASSERT_EQ(wt.letters.size(), 1u);
    EXPECT_EQ(wt.letters[0], (Letter{t, 1}));
    EXPECT_EQ(exponent_sum(wt, t), 1);
    for (std::size_t j = 1; j < gs.free.size(); ++j) {
      const UniModular& g = gs.free[j];
      const UniModular conj = UniModular::T() * g * UniModular::T().inverse();
      EXPECT_EQ(exponent_sum(decompose(Gamma0Element(conj, n), gs), t), 0) << n;
    }
  }
}

TEST(Decompose, RejectsWrongLevel) {
  const GeneratorSet gs = generators(6);
  EXPECT_THROW(decompose(Gamma0Element(UniModular::T(), 3), gs), DomainError);
}

TEST(Decompose, RoundTripsRandomProducts) {
  Rng rng(314);
  for (std::int64_t n = 1; n <= 60; ++n) {
    const GeneratorSet gs = generators(n);
    for (int i = 0; i < 40; ++i) {
      const UniModular g = random_gamma0(gs, rng, 30);
      const Word w = decompose(Gamma0Element(g, n), gs);
      ASSERT_TRUE(normal_form(w)) << n;
      ASSERT_EQ(reconstruct(w, gs), g) << n;
      ASSERT_EQ(decompose(Gamma0Element(g, n), gs), w);
    }
  }
}

TEST(Decompose, RecoversNormalFormsExactly) {
  // normal forms in a free product of cyclic groups are unique
  Rng rng(2718);
  for (std::int64_t n : {1, 2, 3, 5, 6, 7, 10, 12, 13, 21, 49, 91}) {
    const GeneratorSet gs = generators(n);
    for (int i = 0; i < 60; ++i) {
      const Word w = random_normal_word(gs, rng, static_cast<int>(rng.uniform(0, 25)));
      const UniModular g = reconstruct(w, gs);
      ASSERT_EQ(decompose(Gamma0Element(g, n), gs), w) << n;
    }
  }
}

TEST(Decompose, DecomposesSl2zWords) {
  Rng rng(8);
  const GeneratorSet gs = generators(1);
  for (int i = 0; i < 500; ++i) {
    const UniModular g = random_sl2z(rng);
    ASSERT_EQ(reconstruct(decompose(Gamma0Element(g, 1), gs), gs), g);
  }
}

TEST(Decompose, SubdivisionOrderGivesValidSets) {
  Rng rng(77);
  for (std::int64_t n : {11, 24, 35, 64}) {
    const GeneratorSet left = generators(n);
    const GeneratorSet right = generators(n, SubdivisionOrder::Rightmost);
    EXPECT_EQ(left.r(), right.r());
    for (int i = 0; i < 30; ++i) {
      const UniModular g = random_gamma0(left, rng);
      ASSERT_EQ(reconstruct(decompose(Gamma0Element(g, n), right), right), g);
    }
  }
}
