#include <gtest/gtest.h>

#include "telecode/errors.hpp"
#include "telecode/protocols.hpp"
#include "telecode/weyl_pauli.hpp"

using namespace telecode;

TEST(Teleport, IdentityOnRandomStates) {
  for (int d = 2; d <= 6; ++d)
    for (std::uint64_t s = 0; s < 10; ++s) {
      const DensityMatrix rho = DensityMatrix::random(d, s);
      EXPECT_LT((teleport(rho).matrix() - rho.matrix()).norm(), 1e-10);
    }
}

TEST(Teleport, MaximallyMixedQubit) {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(2);
  EXPECT_LT((teleport(rho).matrix() - 0.5 * identity(2)).norm(), 1e-12);
}

TEST(Teleport, OutcomesAreUniform) {
  const DensityMatrix rho = DensityMatrix::random(3, 4);
  const auto rec = alice_measurement(rho);
  EXPECT_NEAR(rec.weight, 1.0 / 9.0, 1e-15);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(rec.at(j, k).trace().real(), 1.0, 1e-12);
      // direct partial inner product agrees with the closed form T^† ρ T (up to the 1/d² weight)
      EXPECT_LT((bell_conditional(rho, j, k) - rec.weight * rec.at(j, k)).norm(), 1e-12);
    }
}

TEST(Teleport, StagedChannelIsIdentity) {
  for (int d = 2; d <= 4; ++d) {
    const auto map = teleport_map(d);
    const CMatrix choi = choi_matrix(map, d);
    CMatrix id_choi = CMatrix::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) id_choi += tensor(matrix_unit(d, a, b), matrix_unit(d, a, b));
    EXPECT_LT((choi - id_choi).norm(), 1e-10);
    EXPECT_LT((choi_input_marginal(choi, d, d) - identity(static_cast<std::size_t>(d))).norm(), 1e-10);
  }
}

TEST(Superdense, PointMassAndRandom) {
  for (int d = 2; d <= 6; ++d) {
    const ClassicalDist p = ClassicalDist::point_mass(d, 1, d - 1);
    const ClassicalDist q = superdense(p);
    EXPECT_NEAR(q.at(1, d - 1), 1.0, 1e-12);
    for (std::uint64_t s = 0; s < 5; ++s) {
      const ClassicalDist r = ClassicalDist::random(d, s);
      const ClassicalDist out = superdense(r);
      for (std::size_t i = 0; i < r.probs().size(); ++i) EXPECT_NEAR(out.probs()[i], r.probs()[i], 1e-10);
    }
  }
}

TEST(Superdense, UniformEncodesMaximallyMixed) {
  const CMatrix st = superdense_encode(ClassicalDist::uniform(3));
  EXPECT_LT((st - identity(9) / 9.0).norm(), 1e-12);
}

TEST(Roundtrip, T1S1AndT2S2) {
  for (int d = 2; d <= 5; ++d)
    for (std::uint64_t s = 0; s < 10; ++s) {
      const DensityMatrix rho = DensityMatrix::random(d, 100 + s);
      EXPECT_LT((t1_map(s1_map(rho.matrix())) - rho.matrix()).norm(), 1e-10);
      const ClassicalDist p = ClassicalDist::random(d, 200 + s);
      CVector pv(d * d);
      for (int a = 0; a < d * d; ++a) pv(a) = p.probs()[static_cast<std::size_t>(a)];
      EXPECT_LT((t2_map(s2_map(pv, d), d) - pv).norm(), 1e-10);
    }
}

TEST(Roundtrip, LinearFormsAgree) {
  const int d = 3;
  const CMatrix rho = DensityMatrix::random(d, 3).matrix();
  const CMatrix x = s1_linear(d)(rho);
  EXPECT_LT((t1_linear(d)(x) - rho).norm(), 1e-10);
}

TEST(Validation, RejectsBadInputs) {
  EXPECT_THROW(DensityMatrix(CMatrix::Identity(2, 2)), ValidationError);
  EXPECT_THROW(ClassicalDist(2, {0.5, 0.5, 0.5, -0.5}), ValidationError);
  EXPECT_THROW(ClassicalDist(2, {1.0}), DimensionError);
  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 1) = 1.0;
  h(0, 0) = h(1, 1) = 0.5;
  EXPECT_THROW(DensityMatrix{h}, ValidationError);
}
