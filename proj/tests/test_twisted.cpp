#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "motivelab/chartable.hpp"
#include "motivelab/twisted.hpp"

using namespace motivelab;

namespace {

TwoCocycle random_cocycle(const GroupPtr& G, std::int64_t n, std::mt19937_64& rng) {
  ModMatrix space = cocycle_space(G, n);
  std::uniform_int_distribution<std::int64_t> c(0, n - 1);
  TwoCocycle a = trivial_cocycle(G, n);
  for (std::size_t r = 0; r < space.rows(); ++r) {
    std::int64_t k = c(rng);
    for (std::size_t i = 0; i < a.table.size(); ++i) a.table[i] = floor_mod(a.table[i] + k * space.row(r)[i], n);
  }
  return a;
}

// Dense numeric oracle: dim of {z : e_s z = z e_s for all s} via rank of the stacked commutator maps.
std::size_t center_dim_oracle(const TwoCocycle& a) {
  const GroupPtr& G = a.group;
  const auto n = static_cast<Eigen::Index>(G->order());
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n * n, n);
  auto root = [&](std::int64_t e) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(a.modulus));
  };
  for (Elem s = 0; s < G->order(); ++s)
    for (Elem h = 0; h < G->order(); ++h) {
      M(s * n + G->mul(s, h), h) += root(a.at(s, h));
      M(s * n + G->mul(h, s), h) -= root(a.at(h, s));
    }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(M);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(n - lu.rank());
}

std::size_t regular_count_oracle(const TwoCocycle& a) {
  const GroupPtr& G = a.group;
  std::size_t count = 0;
  for (const auto& cls : G->classes()) {
    Elem g = cls.representative;
    bool ok = true;
    for (Elem h = 0; h < G->order(); ++h)
      if (G->mul(g, h) == G->mul(h, g) && floor_mod(a.at(g, h) - a.at(h, g), a.modulus) != 0) ok = false;
    if (ok) ++count;
  }
  return count;
}

std::vector<GroupPtr> small_groups() {
  return {cyclic_group(4),         cyclic_group(6),         symmetric_group(3),
          dihedral_group(8),       dihedral_group(12),      elementary_abelian_group(2, 2),
          elementary_abelian_group(2, 3), elementary_abelian_group(3, 2),
          direct_product(cyclic_group(2), cyclic_group(4)), direct_product(cyclic_group(4), cyclic_group(4)),
          direct_product(elementary_abelian_group(2, 2), cyclic_group(2))};
}

}  // namespace

TEST(TwistedAlgebra, TrivialCocycleIsGroupAlgebra) {
  auto S3 = symmetric_group(3);
  auto A = build_twisted(S3, trivial_cocycle(S3));
  EXPECT_EQ(A.dimension(), 6u);
  EXPECT_EQ(alpha_regular(A.cocycle()).count, 3u);
  EXPECT_EQ(center_basis(A).size(), 3u);
  EXPECT_EQ(wedderburn_dims(A).dims, (std::vector<std::int64_t>{1, 1, 2}));
  for (std::size_t n = 2; n <= 9; ++n) {
    auto Cn = cyclic_group(n);
    auto prof = wedderburn_dims(build_twisted(trivial_cocycle(Cn)), n);
    EXPECT_EQ(prof.dims, std::vector<std::int64_t>(n, 1));
  }
}

TEST(TwistedAlgebra, TrivialCocycleMatchesCharacterDegrees) {
  for (const auto& G : small_groups()) {
    auto prof = wedderburn_dims(build_twisted(trivial_cocycle(G)), 3);
    auto degs = character_table(G)->degrees;
    std::sort(degs.begin(), degs.end());
    EXPECT_EQ(prof.dims, degs) << G->label();
  }
}

TEST(TwistedAlgebra, CentralTypePairing) {
  auto E4 = elementary_abelian_group(2, 2);
  auto a = pairing_cocycle(E4, 2);
  auto A = build_twisted(a);
  EXPECT_EQ(A.dimension(), 4u);
  auto rep = alpha_regular(a);
  EXPECT_EQ(rep.count, 1u);
  EXPECT_TRUE(rep.regular[0]);
  EXPECT_EQ(center_basis(A).size(), 1u);
  EXPECT_EQ(wedderburn_dims(A).dims, (std::vector<std::int64_t>{2}));
  EXPECT_EQ(invariant_copies(a), 1u);

  auto E9 = elementary_abelian_group(3, 2);
  auto b = pairing_cocycle(E9, 3);
  EXPECT_EQ(alpha_regular(b).count, 1u);
  EXPECT_EQ(wedderburn_dims(build_twisted(b)).dims, (std::vector<std::int64_t>{3}));
}

TEST(TwistedAlgebra, CenterOfTrivialIsClassSums) {
  auto D8 = dihedral_group(8);
  auto basis = center_basis(build_twisted(trivial_cocycle(D8)));
  ASSERT_EQ(basis.size(), D8->num_classes());
  for (const auto& z : basis) {
    EXPECT_EQ(z.support, D8->classes()[z.conjugacy_class].members);
    for (auto e : z.exponents) EXPECT_EQ(e, 0);
    auto c = z.coefficients(8);
    for (Elem m : z.support) EXPECT_EQ(c[m], Cyclotomic::one());
  }
}

TEST(TwistedAlgebra, DihedralNontrivialClass) {
  auto D8 = dihedral_group(8);
  auto M = schur_multiplier(D8);
  ASSERT_EQ(M.invariant_factors(), (std::vector<std::int64_t>{2}));
  auto a = M.cocycle_from_coordinates({1});
  auto rep = alpha_regular(a);
  EXPECT_EQ(rep.count, regular_count_oracle(a));
  EXPECT_LT(rep.count, 5u);
  auto A = build_twisted(a);
  auto prof = wedderburn_dims(A);
  EXPECT_EQ(prof.dims.size(), rep.count);
  EXPECT_EQ(prof.dims, (std::vector<std::int64_t>{2, 2}));
}

TEST(TwistedAlgebra, CorruptedTableRejected) {
  auto E4 = elementary_abelian_group(2, 2);
  auto a = pairing_cocycle(E4, 2);
  a.at(1, 2) = (a.at(1, 2) + 1) % 2;
  try {
    build_twisted(a);
    FAIL() << "expected NotACocycle";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACocycle);
  }
  auto b = trivial_cocycle(E4, 2);
  b.at(0, 3) = 1;
  EXPECT_THROW(build_twisted(b), Error);
  auto S3 = symmetric_group(3);
  EXPECT_THROW(build_twisted(cyclic_group(6), trivial_cocycle(S3)), Error);
}

TEST(TwistedAlgebra, CoboundariesBehaveLikeTrivial) {
  std::mt19937_64 rng(5);
  for (const auto& G : small_groups()) {
    for (std::int64_t n : {2, 3, 4}) {
      std::uniform_int_distribution<std::int64_t> c(0, n - 1);
      std::vector<std::int64_t> delta(G->order());
      for (auto& d : delta) d = c(rng);
      delta[0] = 0;
      auto a = coboundary(G, n, delta);
      EXPECT_EQ(alpha_regular(a).count, G->num_classes());
      EXPECT_EQ(center_basis(build_twisted(a)).size(), G->num_classes());
    }
  }
}

TEST(TwistedAlgebra, InvariantUnderCohomologousShift) {
  auto D8 = dihedral_group(8);
  auto M = schur_multiplier(D8);
  auto a = M.cocycle_from_coordinates({1});
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> c(0, a.modulus - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::int64_t> delta(8);
    for (auto& d : delta) d = c(rng);
    delta[0] = 0;
    auto b = cocycle_mul(a, coboundary(D8, a.modulus, delta));
    EXPECT_EQ(invariant_copies(b), invariant_copies(a));
  }
}

TEST(TwistedAlgebra, RandomCocyclePropertySuite) {
  std::mt19937_64 rng(2024);
  int cases = 0;
  for (const auto& G : small_groups()) {
    for (std::int64_t n : {2, 4}) {
      for (int trial = 0; trial < 10; ++trial, ++cases) {
        auto a = random_cocycle(G, n, rng);
        auto A = build_twisted(a);
        auto rep = alpha_regular(a);
        EXPECT_EQ(rep.count, regular_count_oracle(a));
        auto center = center_basis(A);
        EXPECT_EQ(center.size(), rep.count);
        EXPECT_EQ(center.size(), center_dim_oracle(a)) << G->label();
        auto prof = wedderburn_dims(A, static_cast<std::uint64_t>(trial));
        EXPECT_EQ(prof.dims.size(), rep.count);
        std::int64_t s = 0;
        for (auto d : prof.dims) s += d * d;
        EXPECT_EQ(s, static_cast<std::int64_t>(G->order()));
      }
    }
  }
  EXPECT_GE(cases, 200);
}

TEST(TwistedAlgebra, SizeGuard) {
  auto big = direct_product(elementary_abelian_group(2, 5), elementary_abelian_group(3, 2));
  EXPECT_THROW(wedderburn_dims(build_twisted(trivial_cocycle(big))), Error);
}
