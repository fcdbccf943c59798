#include <gtest/gtest.h>

#include <random>
#include <set>

#include "motivelab/cohomology.hpp"

using namespace motivelab;

namespace {

using Factors = std::vector<std::int64_t>;

// Dense oracle: kernel of d^2 on normalized cochains, Howell-reduced.
ModMatrix dense_cocycle_space(const GroupPtr& G, std::int64_t n) {
  const std::size_t N = G->order();
  ModMatrix A(n, N * N * N + 2 * N, N * N);
  std::size_t row = 0;
  for (Elem t = 0; t < N; ++t)
    for (Elem r = 0; r < N; ++r)
      for (Elem s = 0; s < N; ++s, ++row) {
        auto add = [&](Elem x, Elem y, std::int64_t v) {
          A(row, x * N + y) = floor_mod(A(row, x * N + y) + v, n);
        };
        add(r, s, 1);
        add(t, G->mul(r, s), 1);
        add(t, r, -1);
        add(G->mul(t, r), s, -1);
      }
  for (Elem g = 0; g < N; ++g) {
    A(row++, g) = 1 % n;
    A(row++, g * N) = 1 % n;
  }
  auto sol = solve_mod(A, std::vector<std::int64_t>(A.rows(), 0));
  return sol->kernel;
}

TwoCocycle random_cocycle(const ModMatrix& space, const GroupPtr& G, std::mt19937_64& rng) {
  const std::int64_t n = space.modulus();
  TwoCocycle a = trivial_cocycle(G, n);
  for (std::size_t i = 0; i < space.rows(); ++i) {
    std::int64_t c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    for (std::size_t j = 0; j < a.table.size(); ++j) a.table[j] = floor_mod(a.table[j] + c * space(i, j), n);
  }
  return a;
}

std::vector<GroupPtr> small_battery() {
  return {cyclic_group(2),          cyclic_group(4),    cyclic_group(6),     symmetric_group(3),
          dihedral_group(8),        dihedral_group(12), elementary_abelian_group(2, 2),
          elementary_abelian_group(2, 3), elementary_abelian_group(3, 2),
          direct_product(cyclic_group(2), cyclic_group(4))};
}

}  // namespace

TEST(Cocycle, TrivialValidates) { EXPECT_TRUE(cocycle_validate(trivial_cocycle(symmetric_group(3), 6)).ok); }

TEST(Cocycle, PairingValidates) {
  auto E4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_TRUE(cocycle_validate(pairing_cocycle(E4, 2)).ok);
}

TEST(Cocycle, PerturbationNamesATriple) {
  auto G = dihedral_group(8);
  auto M = schur_multiplier(G);
  TwoCocycle a = M.section().at(0);
  a.at(3, 5) = floor_mod(a.at(3, 5) + 1, a.modulus);
  auto rep = cocycle_validate(a);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.kind, "identity");
  // the reported triple really violates the identity
  auto [t, r, s] = rep.triple;
  std::int64_t lhs = a.at(r, s) + a.at(t, G->mul(r, s));
  std::int64_t rhs = a.at(t, r) + a.at(G->mul(t, r), s);
  EXPECT_NE(floor_mod(lhs - rhs, a.modulus), 0);
  a = trivial_cocycle(G, 4);
  a.at(0, 2) = 1;
  EXPECT_EQ(cocycle_validate(a).kind, "normalization");
}

TEST(CocycleSpace, TrivialGroup) { EXPECT_EQ(cocycle_space(cyclic_group(1), 5).rows(), 0u); }

TEST(CocycleSpace, CyclicTwoModTwoHasTwoElements) {
  auto C2 = cyclic_group(2);
  ModMatrix Z = cocycle_space(C2, 2);
  EXPECT_EQ(howell_span_size(Z), 2);
  // exhaustive enumeration of normalized tables: only (1,1) entry is free
  int valid = 0;
  for (int v = 0; v < 2; ++v) {
    TwoCocycle a = trivial_cocycle(C2, 2);
    a.at(1, 1) = v;
    if (cocycle_validate(a).ok) {
      ++valid;
      EXPECT_TRUE(in_row_space(Z, a.table));
    }
  }
  EXPECT_EQ(valid, 2);
}

TEST(CocycleSpace, ContainsPairing) {
  auto E4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_TRUE(in_row_space(cocycle_space(E4, 2), pairing_cocycle(E4, 2).table));
}

TEST(CocycleSpace, MatchesDenseKernelOracle) {
  for (const auto& G : small_battery()) {
    if (G->order() > 12) continue;
    for (std::int64_t n : std::vector<std::int64_t>{2, 3, 4, static_cast<std::int64_t>(G->order())}) {
      ModMatrix fast = cocycle_space(G, n);
      ModMatrix dense = dense_cocycle_space(G, n);
      EXPECT_EQ(fast, dense) << G->label() << " n=" << n;
      for (std::size_t i = 0; i < fast.rows(); ++i) EXPECT_TRUE(cocycle_validate(cocycle_from_row(G, fast, i)).ok);
    }
    // |Z^2(G, Z/|G|)| = |M(G)| * |G|^(|G|-1)
    std::int64_t n = static_cast<std::int64_t>(G->order());
    Int expected = Int(static_cast<long>(schur_multiplier(G).order()));
    for (std::size_t i = 1; i < G->order(); ++i) expected *= n;
    EXPECT_EQ(howell_span_size(cocycle_space(G, n)), expected) << G->label();
  }
}

TEST(CocycleSpace, SizeGuard) {
  try {
    cocycle_space(cyclic_group(65), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeBound);
  }
}

TEST(Cohomologous, IdenticalCocycles) {
  auto G = symmetric_group(3);
  auto w = is_cohomologous(trivial_cocycle(G, 6), trivial_cocycle(G, 6));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->delta, std::vector<std::int64_t>(6, 0));
}

TEST(Cohomologous, NontrivialCyclicTwoIsCoboundary) {
  auto C2 = cyclic_group(2);
  TwoCocycle a = trivial_cocycle(C2, 2);
  a.at(1, 1) = 1;
  auto w = is_cohomologous(a, trivial_cocycle(C2, 2));
  ASSERT_TRUE(w);
  // d(rs) + e_a(r,s) = d(r) + d(s) + e_b(r,s) in mu_N
  const std::int64_t N = w->modulus, k = N / 2;
  for (Elem r = 0; r < 2; ++r)
    for (Elem s = 0; s < 2; ++s)
      EXPECT_EQ(floor_mod(w->delta[C2->mul(r, s)] + k * a.at(r, s) - w->delta[r] - w->delta[s], N), 0);
  EXPECT_EQ(w->delta[0], 0);
}

TEST(Cohomologous, PairingIsNotTrivial) {
  auto E4 = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_FALSE(is_cohomologous(pairing_cocycle(E4, 2), trivial_cocycle(E4, 2)));
}

TEST(Cohomologous, Mismatches) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  auto G = cyclic_group(3);
  EXPECT_EQ(code_of([&] { is_cohomologous(trivial_cocycle(G, 3), trivial_cocycle(cyclic_group(4), 3)); }),
            ErrorCode::GroupMismatch);
  EXPECT_EQ(code_of([&] { is_cohomologous(trivial_cocycle(G, 3), trivial_cocycle(G, 6)); }),
            ErrorCode::ModulusMismatch);
}

TEST(Schur, ReferenceTable) {
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_TRUE(schur_multiplier(cyclic_group(n)).invariant_factors().empty());
  EXPECT_TRUE(schur_multiplier(symmetric_group(3)).invariant_factors().empty());
  EXPECT_EQ(schur_multiplier(symmetric_group(4)).invariant_factors(), Factors{2});
  EXPECT_EQ(schur_multiplier(symmetric_group(5), 120).invariant_factors(), Factors{2});
  EXPECT_TRUE(schur_multiplier(dihedral_group(6)).invariant_factors().empty());
  EXPECT_TRUE(schur_multiplier(dihedral_group(10)).invariant_factors().empty());
  EXPECT_EQ(schur_multiplier(dihedral_group(8)).invariant_factors(), Factors{2});
  EXPECT_EQ(schur_multiplier(dihedral_group(12)).invariant_factors(), Factors{2});
  EXPECT_EQ(schur_multiplier(elementary_abelian_group(2, 2)).invariant_factors(), Factors{2});
  EXPECT_EQ(schur_multiplier(elementary_abelian_group(2, 3)).invariant_factors(), (Factors{2, 2, 2}));
  EXPECT_EQ(schur_multiplier(elementary_abelian_group(3, 2)).invariant_factors(), Factors{3});
  EXPECT_EQ(schur_multiplier(direct_product(cyclic_group(2), cyclic_group(4))).invariant_factors(), Factors{2});
  EXPECT_EQ(format_invariant_factors({2, 2}), "C2 x C2");
}

TEST(Schur, SizeGuard) { EXPECT_THROW(schur_multiplier(symmetric_group(5)), Error); }

TEST(Schur, SectionRepresentativesHaveDeclaredOrders) {
  for (const auto& G : small_battery()) {
    auto M = schur_multiplier(G);
    for (std::size_t i = 0; i < M.section().size(); ++i) {
      const TwoCocycle& a = M.section()[i];
      EXPECT_TRUE(cocycle_validate(a).ok);
      auto c = class_of(a, M);
      std::vector<std::int64_t> e(M.invariant_factors().size(), 0);
      e[i] = 1;
      EXPECT_EQ(c.coordinates, e);
      EXPECT_EQ(class_order(c), M.invariant_factors()[i]);
      EXPECT_TRUE(class_pow(c, M.invariant_factors()[i], M).is_trivial());
      EXPECT_EQ(static_cast<std::int64_t>(G->order()) % class_order(c), 0);
    }
  }
}

TEST(ClassOf, CoboundariesAndPairing) {
  auto E4 = direct_product(cyclic_group(2), cyclic_group(2));
  auto M = schur_multiplier(E4);
  EXPECT_TRUE(class_of(coboundary(E4, 4, {0, 1, 3, 2}), M).is_trivial());
  EXPECT_EQ(class_of(pairing_cocycle(E4, 2), M).coordinates, Factors{1});
  auto sq = class_mul(class_of(pairing_cocycle(E4, 2), M), class_of(pairing_cocycle(E4, 2), M), M);
  EXPECT_TRUE(sq.is_trivial());
}

TEST(ClassOf, RejectsNonCocycle) {
  auto G = cyclic_group(3);
  TwoCocycle a = trivial_cocycle(G, 3);
  a.at(1, 2) = 1;
  try {
    class_of(a, schur_multiplier(G));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACocycle);
  }
}

TEST(ClassOf, AgreesWithIsCohomologousOnRandomPairs) {
  std::mt19937_64 rng(2024);
  int cases = 0;
  for (const auto& G : small_battery()) {
    if (G->order() > 12) continue;
    auto M = schur_multiplier(G);
    std::int64_t n = static_cast<std::int64_t>(G->order());
    ModMatrix Z = cocycle_space(G, n);
    std::vector<TwoCocycle> pool;
    for (int i = 0; i < 6; ++i) pool.push_back(random_cocycle(Z, G, rng));
    for (const auto& s : M.section()) pool.push_back(s);
    // coboundary-shifted copies make cohomologous pairs frequent
    for (std::size_t i = 0, m = pool.size(); i < m; ++i) {
      std::vector<std::int64_t> delta(G->order());
      for (auto& d : delta) d = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
      pool.push_back(cocycle_mul(pool[i], coboundary(G, n, delta)));
    }
    for (const auto& a : pool)
      for (const auto& b : pool) {
        bool same_class = class_of(a, M).coordinates == class_of(b, M).coordinates;
        EXPECT_EQ(same_class, is_cohomologous(a, b).has_value()) << G->label();
        ++cases;
        auto prod = class_of(cocycle_mul(a, b), M).coordinates;
        auto ca = class_of(a, M).coordinates, cb = class_of(b, M).coordinates;
        for (std::size_t i = 0; i < prod.size(); ++i)
          EXPECT_EQ(prod[i], floor_mod(ca[i] + cb[i], M.invariant_factors()[i]));
      }
  }
  EXPECT_GE(cases, 200);
}

TEST(ClassArith, GroupLaws) {
  auto G = elementary_abelian_group(2, 3);
  auto M = schur_multiplier(G);
  std::set<std::vector<std::int64_t>> reached;
  for (std::int64_t mask = 0; mask < 8; ++mask) {
    std::vector<std::int64_t> c{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
    auto cls = class_from_coordinates(M, c);
    EXPECT_EQ(class_of(cls.representative, M).coordinates, c);
    EXPECT_TRUE(class_mul(cls, class_inv(cls, M), M).is_trivial());
    auto triv = class_of(trivial_cocycle(G, 8), M);
    EXPECT_EQ(class_mul(triv, cls, M).coordinates, c);
    reached.insert(c);
  }
  EXPECT_EQ(static_cast<std::int64_t>(reached.size()), M.order());
}
