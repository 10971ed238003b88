#include <gtest/gtest.h>

#include "telecode/errors.hpp"
#include "telecode/homomorphisms.hpp"
#include "telecode/weyl_pauli.hpp"

using namespace telecode;

TEST(Reps, RandomRepsAreValid) {
  for (int d = 2; d <= 3; ++d) {
    const FreeRep f = random_free_rep(d, 2, 1);
    EXPECT_EQ(f.num_gens(), static_cast<std::size_t>(d * d));
    const BrownRep b = random_brown_rep(d, 2, 1);
    EXPECT_TRUE(is_unitary(b.fundamental(), 1e-10));
  }
}

TEST(Reps, RejectsNonUnitaryFundamental) {
  std::vector<CMatrix> blocks(4, CMatrix::Identity(1, 1));
  EXPECT_THROW(BrownRep(2, blocks), ValidationError);
  EXPECT_THROW(FreeRep({CMatrix::Identity(2, 2) * 2.0}), ValidationError);
}

TEST(Sigma1, FundamentalIsUnitary) {
  for (int d = 2; d <= 3; ++d)
    for (std::uint64_t s = 0; s < 10; ++s) {
      const FreeRep f = random_free_rep(d, 2, s);
      const BrownRep b = sigma1(f);
      EXPECT_LT(unitarity_residual(b.fundamental()), 1e-10);
      EXPECT_LT((sigma1_projector_form(f) - b.fundamental()).norm(), 1e-10);
    }
}

TEST(Sigma2, ImagesUnitaryAndDualFormulaAgrees) {
  for (int d = 2; d <= 3; ++d)
    for (std::uint64_t s = 0; s < 10; ++s) {
      const BrownRep b = random_brown_rep(d, 2, 50 + s);
      const auto a = sigma2_images(b), c = sigma2_conjugation_images(b);
      ASSERT_EQ(a.size(), c.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_LT(unitarity_residual(a[i]), 1e-10);
        EXPECT_LT((a[i] - c[i]).norm(), 1e-10);
      }
    }
}

TEST(Automorphisms, AlphaAndBetaHaveOrderD) {
  const int d = 3;
  const BrownRep b = random_brown_rep(d, 2, 3);
  const BrownRep a3 = alpha_power(b, 3, 0), c3 = alpha_power(b, 0, 3);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      EXPECT_LT((a3.block(j, k) - b.block(j, k)).norm(), 1e-12);
      EXPECT_LT((c3.block(j, k) - b.block(j, k)).norm(), 1e-12);
    }
  const FreeRep f = random_free_rep(d, 2, 3);
  const FreeRep g = beta_power(f, 1, 2);
  EXPECT_LT((g.gen(0, 0) - f.gen(1, mod(0 - 2, d))).norm(), 1e-12);
}

TEST(Automorphisms, AlphaPhase) {
  // α1^l α2^n: u_jk ↦ ω^{l(j-k)} u_{j+n,k+n}
  const int d = 3;
  const BrownRep b = random_brown_rep(d, 2, 8);
  const BrownRep a = alpha_power(b, 2, 1);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      EXPECT_LT((a.block(j, k) - root_of_unity(d, 2 * (j - k)) * b.block(mod(j + 1, d), mod(k + 1, d))).norm(), 1e-12);
}

TEST(Crossed, UeConjugations) {
  for (int d = 2; d <= 6; ++d) {
    const CheckList c = check_ue(d, 1e-12);
    EXPECT_TRUE(c.all_pass()) << d;
    EXPECT_GE(c.size(), 3u);
  }
}

TEST(Crossed, Covariance) {
  for (int d = 2; d <= 6; ++d) {
    const CheckList c = check_covariance(random_brown_rep(d, 1, 9), 1e-12);
    EXPECT_TRUE(c.all_pass()) << d << " max " << c.max_residual();
  }
}

TEST(Crossed, EmbeddingUnit) {
  const auto e = covariant_embedding(random_brown_rep(2, 2, 4));
  EXPECT_LT((e.unit - identity(static_cast<std::size_t>(e.unit.rows()))).norm(), 1e-12);
  EXPECT_LT((e.v * e.w - root_of_unity(2, 1) * e.w * e.v).norm(), 1e-12);
}

TEST(Compose, IdentitiesHoldOnRandomReps) {
  for (int d = 2; d <= 3; ++d)
    for (std::uint64_t s = 0; s < 3; ++s) {
      const CheckList a = compose_identity_check(random_brown_rep(d, 2, s), 1e-10);
      EXPECT_TRUE(a.all_pass()) << a.max_residual();
      const CheckList b = compose_identity_check_free(random_free_rep(d, 2, s), 1e-10);
      EXPECT_TRUE(b.all_pass()) << b.max_residual();
    }
}

TEST(Compose, FaultInjectionIsDetectedAtTheBlock) {
  const CheckList c = compose_identity_check(random_brown_rep(2, 2, 1), 1e-10, BlockFault{1, 0, 1e-3});
  EXPECT_FALSE(c.all_pass());
  for (const auto& n : c.failed_names()) EXPECT_NE(n.find("[1,0]"), std::string::npos) << n;
}

TEST(VUnitary, MapsBasisToEntangledBasis) {
  const int d = 3;
  const CMatrix v = v_unitary(d);
  const auto basis = entangled_basis(d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      EXPECT_LT((v.col(j * d + k) - root_of_unity(d, -j * k) * basis.at(j, k).amplitudes).norm(), 1e-12);
}
