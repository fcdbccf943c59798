#include <gtest/gtest.h>

#include <random>

#include "motivelab/repring.hpp"

using namespace motivelab;

namespace {

std::vector<GroupPtr> dixon_battery() {
  std::vector<GroupPtr> out;
  for (std::size_t n = 2; n <= 12; ++n) out.push_back(cyclic_group(n));
  for (auto g : {symmetric_group(3), symmetric_group(4), dihedral_group(6), dihedral_group(8), dihedral_group(12),
                 elementary_abelian_group(2, 2), elementary_abelian_group(2, 3), elementary_abelian_group(3, 2),
                 direct_product(elementary_abelian_group(2, 2), symmetric_group(3)),
                 from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4")})
    out.push_back(g);
  return out;
}

VirtualCharacter random_virtual(const CharacterTablePtr& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<Rational> v(t->size());
  for (auto& x : v) x = c(rng);
  return {t, v};
}

}  // namespace

TEST(CharacterTable, CyclicThreeCanonicalRows) {
  auto t = character_table(cyclic_group(3));
  Cyclotomic z = Cyclotomic::root(3, 1), z2 = Cyclotomic::root(3, 2), one = Cyclotomic::one();
  ASSERT_EQ(t->size(), 3u);
  EXPECT_EQ(t->values[0], (std::vector<Cyclotomic>{one, one, one}));
  EXPECT_EQ(t->values[1], (std::vector<Cyclotomic>{one, z, z2}));
  EXPECT_EQ(t->values[2], (std::vector<Cyclotomic>{one, z2, z}));
}

TEST(CharacterTable, Degrees) {
  EXPECT_EQ(character_table(symmetric_group(3))->degrees, (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_EQ(character_table(dihedral_group(8))->degrees, (std::vector<std::int64_t>{1, 1, 1, 1, 2}));
  EXPECT_EQ(character_table(symmetric_group(4))->degrees, (std::vector<std::int64_t>{1, 1, 2, 3, 3}));
  EXPECT_EQ(character_table(symmetric_group(5))->degrees, (std::vector<std::int64_t>{1, 1, 4, 4, 5, 5, 6}));
}

TEST(CharacterTable, OrthogonalityOnBattery) {
  for (const auto& G : dixon_battery()) {
    auto t = character_table(G);
    EXPECT_EQ(t->size(), G->num_classes()) << G->label();
    std::int64_t s = 0;
    for (auto d : t->degrees) s += d * d;
    EXPECT_EQ(s, static_cast<std::int64_t>(G->order()));
    for (std::size_t i = 0; i < t->size(); ++i)
      for (std::size_t j = 0; j < t->size(); ++j)
        EXPECT_EQ(t->inner_with_irrep(t->values[i], j), Cyclotomic::rational(i == j ? 1 : 0)) << G->label();
    EXPECT_TRUE(column_orthogonality_holds(*t)) << G->label();
    for (const auto& v : t->values[0]) EXPECT_EQ(v, Cyclotomic::one());
  }
}

TEST(CharacterTable, SeedDoesNotLeak) {
  for (const auto& G : {symmetric_group(4), dihedral_group(12), elementary_abelian_group(3, 2)}) {
    auto a = compute_character_table(G, 0), b = compute_character_table(G, 12345);
    EXPECT_EQ(a->degrees, b->degrees);
    EXPECT_EQ(a->values, b->values);
  }
}

TEST(RepRing, CyclicPresentation) {
  for (std::size_t n = 2; n <= 12; ++n) {
    auto t = character_table(cyclic_group(n));
    // the generator chi: value zeta_n at the class of element 1
    std::size_t gen = t->size();
    for (std::size_t i = 0; i < t->size(); ++i)
      if (t->values[i][t->group->class_index(1)] == Cyclotomic::root(static_cast<std::int64_t>(n), 1)) gen = i;
    ASSERT_LT(gen, t->size());
    VirtualCharacter chi = VirtualCharacter::irreducible(t, gen);
    EXPECT_EQ(power(chi, static_cast<unsigned>(n)), VirtualCharacter::one(t));
    EXPECT_EQ(chi * power(chi, static_cast<unsigned>(n - 1)), VirtualCharacter::one(t));
    // {1, chi, ..., chi^{n-1}} is a permutation of the irreducible basis
    std::vector<int> hit(t->size(), 0);
    for (unsigned k = 0; k < n; ++k) {
      auto p = power(chi, k);
      int nonzero = 0;
      for (std::size_t i = 0; i < t->size(); ++i)
        if (p.coeffs()[i] != 0) {
          EXPECT_EQ(p.coeffs()[i], 1);
          ++hit[i];
          ++nonzero;
        }
      EXPECT_EQ(nonzero, 1);
    }
    for (int h : hit) EXPECT_EQ(h, 1);
  }
}

TEST(RepRing, SymmetricThreeRelations) {
  auto t = character_table(symmetric_group(3));
  auto one = VirtualCharacter::one(t);
  auto chi = VirtualCharacter::irreducible(t, 1);
  auto psi = VirtualCharacter::irreducible(t, 2);
  EXPECT_EQ(chi * chi, one);
  EXPECT_EQ(chi * psi, psi * chi);
  EXPECT_EQ(chi * psi, psi);
  EXPECT_EQ(psi * psi, one + chi + psi);
}

TEST(RepRing, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(77);
  int cases = 0;
  for (const auto& G : {symmetric_group(3), dihedral_group(8), symmetric_group(4), cyclic_group(6)}) {
    auto t = character_table(G);
    for (int trial = 0; trial < 60; ++trial, ++cases) {
      auto a = random_virtual(t, rng), b = random_virtual(t, rng), c = random_virtual(t, rng);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * VirtualCharacter::one(t), a);
      EXPECT_EQ((a * b).rank(), a.rank() * b.rank());
      EXPECT_EQ((a + b).rank(), a.rank() + b.rank());
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
  EXPECT_GE(cases, 200);
}

TEST(RepRing, RankExamples) {
  for (const auto& G : dixon_battery()) {
    auto t = character_table(G);
    EXPECT_EQ(VirtualCharacter::trivial(t).rank(), 1);
    EXPECT_EQ(VirtualCharacter::regular(t).rank(), static_cast<long>(G->order()));
    auto idem = idempotents(t);
    EXPECT_EQ(idem.e_plus.rank(), 1);
    EXPECT_EQ(idem.e_minus.rank(), 0);
  }
}

TEST(RepRing, Idempotents) {
  auto t2 = character_table(cyclic_group(2));
  auto idem2 = idempotents(t2);
  EXPECT_EQ(idem2.e_plus, VirtualCharacter(t2, {Rational(1, 2), Rational(1, 2)}));
  auto t = character_table(symmetric_group(3));
  auto idem = idempotents(t);
  EXPECT_EQ(idem.e_plus, VirtualCharacter(t, {Rational(1, 6), Rational(1, 6), Rational(1, 3)}));
  EXPECT_EQ(idem.e_plus * idem.e_plus, idem.e_plus);
}

TEST(RepRing, UnitAtAugmentationIdeal) {
  auto t = character_table(cyclic_group(3));
  EXPECT_TRUE(is_unit_at_I(VirtualCharacter::one(t)));
  EXPECT_TRUE(is_unit_at_I(VirtualCharacter::regular(t)));
  EXPECT_FALSE(is_unit_at_I(VirtualCharacter::one(t) - VirtualCharacter::irreducible(t, 1)));
}

TEST(RepRing, PermutationCharacters) {
  auto S3 = symmetric_group(3);
  auto t = character_table(S3);
  EXPECT_EQ(permutation_character(t, Subgroup::whole(S3)), VirtualCharacter::trivial(t));
  EXPECT_EQ(permutation_character(t, Subgroup::trivial(S3)), VirtualCharacter::regular(t));
  Elem tr = 0;
  for (Elem g = 1; g < 6; ++g)
    if (S3->element_order(g) == 2) {
      tr = g;
      break;
    }
  auto pc = permutation_character(t, Subgroup::generated(S3, {tr}));
  EXPECT_EQ(pc, VirtualCharacter::trivial(t) + VirtualCharacter::irreducible(t, 2));
  for (const auto& G : dixon_battery()) {
    if (G->order() > 12) continue;
    auto tg = character_table(G);
    for (const auto& H : all_subgroups(G)) {
      auto p = permutation_character(tg, H);
      EXPECT_EQ(p.coeffs()[0], 1);  // transitive action: one orbit
      EXPECT_EQ(p.rank(), Rational(static_cast<long>(H.index())));
    }
  }
}

TEST(RepRing, Restriction) {
  auto S3 = symmetric_group(3);
  auto t = character_table(S3);
  Elem r = 0;
  for (Elem g = 1; g < 6; ++g)
    if (S3->element_order(g) == 3) {
      r = g;
      break;
    }
  Subgroup C3 = Subgroup::generated(S3, {r});
  auto tH = character_table(C3.as_group());
  EXPECT_EQ(restrict_to(VirtualCharacter::trivial(t), C3, tH), VirtualCharacter::trivial(tH));
  EXPECT_EQ(restrict_to(VirtualCharacter::regular(t), C3, tH), Rational(2) * VirtualCharacter::regular(tH));
  EXPECT_EQ(restrict_to(VirtualCharacter::irreducible(t, 2), C3, tH),
            VirtualCharacter::irreducible(tH, 1) + VirtualCharacter::irreducible(tH, 2));
  EXPECT_THROW(restrict_to(VirtualCharacter::trivial(character_table(cyclic_group(6))), C3, tH), Error);
}

TEST(RepRing, EndomorphismRankEqualsClassCount) {
  for (const auto& G : dixon_battery()) EXPECT_EQ(character_table(G)->size(), G->num_classes());
}
