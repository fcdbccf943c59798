#include <gtest/gtest.h>

#include <set>

#include "motivelab/group.hpp"

using namespace motivelab;

namespace {

std::vector<std::size_t> class_sizes(const GroupPtr& G) {
  std::vector<std::size_t> out;
  for (const auto& c : G->classes()) out.push_back(c.members.size());
  return out;
}

// Brute-force orbit enumeration, independent of FiniteGroup::classes().
std::multiset<std::size_t> brute_class_sizes(const GroupPtr& G) {
  std::vector<bool> seen(G->order(), false);
  std::multiset<std::size_t> out;
  for (Elem g = 0; g < G->order(); ++g) {
    if (seen[g]) continue;
    std::set<Elem> orbit;
    for (Elem h = 0; h < G->order(); ++h) orbit.insert(G->mul(G->mul(h, g), G->inv(h)));
    for (Elem x : orbit) seen[x] = true;
    out.insert(orbit.size());
  }
  return out;
}

std::vector<GroupPtr> battery() {
  return {cyclic_group(1),          cyclic_group(4),          cyclic_group(12),       symmetric_group(3),
          symmetric_group(4),       dihedral_group(6),        dihedral_group(8),      dihedral_group(12),
          elementary_abelian_group(2, 2), elementary_abelian_group(2, 3), elementary_abelian_group(3, 2),
          direct_product(cyclic_group(2), symmetric_group(3))};
}

}  // namespace

TEST(Group, TrivialGroup) {
  auto G = cyclic_group(1);
  EXPECT_EQ(G->order(), 1u);
  EXPECT_EQ(G->num_classes(), 1u);
}

TEST(Group, SymmetricThree) {
  auto G = symmetric_group(3);
  EXPECT_EQ(G->order(), 6u);
  EXPECT_EQ(class_sizes(G), (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Group, ElementaryAbelianFour) {
  auto G = elementary_abelian_group(2, 2);
  EXPECT_EQ(G->order(), 4u);
  EXPECT_EQ(G->num_classes(), 4u);
}

TEST(Group, DihedralEightClasses) {
  EXPECT_EQ(class_sizes(dihedral_group(8)), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(Group, CyclicFourSingletons) { EXPECT_EQ(class_sizes(cyclic_group(4)), std::vector<std::size_t>(4, 1)); }

TEST(Group, ClassesMatchBruteForceAndPartition) {
  for (const auto& G : battery()) {
    auto sizes = class_sizes(G);
    EXPECT_EQ(std::multiset<std::size_t>(sizes.begin(), sizes.end()), brute_class_sizes(G)) << G->label();
    std::size_t total = 0;
    for (const auto& c : G->classes()) {
      total += c.members.size();
      EXPECT_EQ(G->order() % c.members.size(), 0u);
      EXPECT_EQ(c.representative, c.members.front());
    }
    EXPECT_EQ(total, G->order());
    EXPECT_EQ(G->classes().front().representative, 0u);
    for (std::size_t i = 0; i + 1 < G->classes().size(); ++i) {
      const auto& a = G->classes()[i];
      const auto& b = G->classes()[i + 1];
      EXPECT_TRUE(a.members.size() < b.members.size() ||
                  (a.members.size() == b.members.size() && a.representative < b.representative));
    }
  }
}

TEST(Group, CentralizerOrbitProduct) {
  for (const auto& G : battery())
    for (Elem g = 0; g < G->order(); ++g) {
      Subgroup C = centralizer(G, g);
      EXPECT_EQ(C.order() * G->classes()[G->class_index(g)].members.size(), G->order());
    }
  auto S3 = symmetric_group(3);
  EXPECT_TRUE(centralizer(S3, 0).is_whole());
  for (Elem g = 0; g < 6; ++g)
    if (S3->element_order(g) == 2) {
      EXPECT_EQ(centralizer(S3, g).order(), 2u);
    }
  auto C5 = cyclic_group(5);
  for (Elem g = 0; g < 5; ++g) EXPECT_TRUE(centralizer(C5, g).is_whole());
}

TEST(Group, CosetSpaces) {
  auto S3 = symmetric_group(3);
  auto whole = coset_space(S3, Subgroup::whole(S3));
  EXPECT_EQ(whole.size(), 1u);
  Elem t = 0;
  for (Elem g = 1; g < 6; ++g)
    if (S3->element_order(g) == 2) {
      t = g;
      break;
    }
  auto cs = coset_space(S3, Subgroup::generated(S3, {t}));
  EXPECT_EQ(cs.size(), 3u);
  std::set<std::vector<std::size_t>> perms;
  for (Elem g = 0; g < 6; ++g) perms.insert(cs.action[g]);
  EXPECT_EQ(perms.size(), 6u);  // faithful: the natural action of S3 on 3 points

  auto C4 = cyclic_group(4);
  auto cs4 = coset_space(C4, Subgroup::make(C4, {0, 2}));
  EXPECT_EQ(cs4.size(), 2u);
  for (Elem g = 0; g < 4; ++g) EXPECT_EQ(cs4.action[g][0], g % 2);
}

TEST(Group, CosetActionIsHomomorphismAndTransitive) {
  for (const auto& G : battery()) {
    if (G->order() > 24) continue;
    for (const auto& H : all_subgroups(G)) {
      auto cs = coset_space(G, H);
      for (Elem a = 0; a < G->order(); ++a)
        for (Elem b = 0; b < G->order(); ++b)
          for (std::size_t i = 0; i < cs.size(); ++i)
            ASSERT_EQ(cs.action[G->mul(a, b)][i], cs.action[a][cs.action[b][i]]);
      std::set<std::size_t> orbit;
      for (Elem g = 0; g < G->order(); ++g) orbit.insert(cs.action[g][0]);
      EXPECT_EQ(orbit.size(), cs.size());
    }
  }
}

TEST(Group, Abelianization) {
  EXPECT_EQ(abelianization(symmetric_group(3)).invariant_factors, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(abelianization(elementary_abelian_group(2, 2)).invariant_factors, (std::vector<std::int64_t>{2, 2}));
  for (std::size_t n = 2; n <= 12; ++n)
    EXPECT_EQ(abelianization(cyclic_group(n)).invariant_factors, (std::vector<std::int64_t>{static_cast<std::int64_t>(n)}));
  EXPECT_TRUE(abelianization(cyclic_group(1)).invariant_factors.empty());
  EXPECT_EQ(abelianization(dihedral_group(8)).invariant_factors, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(abelianization(symmetric_group(4)).invariant_factors, (std::vector<std::int64_t>{2}));
}

TEST(Group, AbelianizationProjectionIsHomomorphismKillingCommutators) {
  for (const auto& G : battery()) {
    auto ab = abelianization(G);
    const auto& d = ab.invariant_factors;
    for (Elem a = 0; a < G->order(); ++a)
      for (Elem b = 0; b < G->order(); ++b) {
        const auto &pa = ab.projection[a], &pb = ab.projection[b], &pab = ab.projection[G->mul(a, b)];
        for (std::size_t i = 0; i < d.size(); ++i) ASSERT_EQ(floor_mod(pa[i] + pb[i], d[i]), pab[i]);
        for (std::size_t i = 0; i < d.size(); ++i) ASSERT_EQ(ab.projection[G->commutator(a, b)][i], 0);
      }
    std::set<std::vector<std::int64_t>> image(ab.projection.begin(), ab.projection.end());
    EXPECT_EQ(static_cast<std::int64_t>(image.size()), ab.order());
  }
}

TEST(Group, MalformedCayleyInput) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  EXPECT_EQ(code_of([] { from_cayley({{0, 1}, {1, 1}}); }), ErrorCode::NotClosed);
  EXPECT_EQ(code_of([] { from_cayley({{1, 0}, {0, 0}}); }), ErrorCode::NoIdentity);
  EXPECT_EQ(code_of([] { from_cayley({{0, 3}, {1, 0}}); }), ErrorCode::NotClosed);
  // Latin square with identity 0 that is not associative
  EXPECT_EQ(code_of([] {
              from_cayley({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
            }),
            ErrorCode::NonAssociative);
  EXPECT_EQ(code_of([] { cyclic_group(5000); }), ErrorCode::OrderBound);
}

TEST(Group, CayleyRelabelsIdentity) {
  // Z/3 written with identity labelled 2
  auto G = from_cayley({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  EXPECT_EQ(G->order(), 3u);
  EXPECT_EQ(G->mul(0, 1), 1u);
}

TEST(Group, PermGensLexicographicNumbering) {
  auto G = from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(G->order(), 6u);
  EXPECT_TRUE(G->same_table(*symmetric_group(3)));
}

TEST(Group, SmallGeneratingSetGenerates) {
  for (const auto& G : battery()) {
    auto gens = small_generating_set(G);
    EXPECT_TRUE(Subgroup::generated(G, gens).is_whole());
  }
  EXPECT_EQ(small_generating_set(symmetric_group(4)).size(), 2u);
}

TEST(Group, SubgroupValidation) {
  auto S3 = symmetric_group(3);
  EXPECT_THROW(Subgroup::make(S3, {0, 1, 2}), Error);
  EXPECT_EQ(all_subgroups(S3).size(), 6u);
  EXPECT_EQ(all_subgroups(dihedral_group(8)).size(), 10u);
}
