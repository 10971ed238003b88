#include <gtest/gtest.h>

#include "telecode/errors.hpp"
#include "telecode/matrix_core.hpp"

using namespace telecode;

TEST(Tensor, KroneckerOfUnits) {
  const CMatrix a = matrix_unit(2, 0, 1), b = matrix_unit(3, 2, 0);
  const CMatrix t = tensor(a, b);
  EXPECT_EQ(t.rows(), 6);
  EXPECT_EQ(t(0 * 3 + 2, 1 * 3 + 0), cplx(1.0));
  EXPECT_NEAR(t.cwiseAbs().sum(), 1.0, 0.0);
}

TEST(Tensor, ListAssociates) {
  const CMatrix a = random_unitary(2, 1), b = random_unitary(2, 2), c = random_unitary(3, 3);
  EXPECT_LT((tensor({a, b, c}) - tensor(tensor(a, b), c)).norm(), 1e-14);
}

TEST(StateVectorTest, RejectsBadFactorDims) {
  EXPECT_THROW(StateVector(CVector::Zero(6), {2, 2}), DimensionError);
  EXPECT_NO_THROW(StateVector(CVector::Zero(6), {2, 3}));
}

TEST(Unitary, PowerNegativeUsesAdjoint) {
  const CMatrix u = random_unitary(4, 9);
  EXPECT_LT((unitary_power(u, -2) * unitary_power(u, 2) - identity(4)).norm(), 1e-12);
  EXPECT_LT((unitary_power(u, 0) - identity(4)).norm(), 0.0 + 1e-15);
}

TEST(Unitary, RandomIsUnitaryAndDeterministic) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const CMatrix u = random_unitary(5, s);
    EXPECT_TRUE(is_unitary(u, 1e-12));
    EXPECT_EQ((u - random_unitary(5, s)).norm(), 0.0);
  }
}

TEST(Unitary, SeedRegression) {
  const CMatrix u = random_unitary(3, 42);
  EXPECT_NEAR(u(0, 0).real(), 0.25633781268909539, 1e-13);
  EXPECT_NEAR(u(0, 0).imag(), 0.47044059186692133, 1e-13);
  EXPECT_NEAR(u(1, 2).real(), -0.36739215811765336, 1e-13);
  EXPECT_NEAR(u(1, 2).imag(), 0.37928870046223612, 1e-13);
  const CVector v = random_unit_vector(4, 7);
  EXPECT_NEAR(v(0).real(), 0.29936728530512341, 1e-13);
  EXPECT_NEAR(v(0).imag(), -0.33362566850643272, 1e-13);
  EXPECT_EQ(derive_seed(0, 1), 7960286522194355700ULL);
  EXPECT_EQ(derive_seed(42, 7), 14769051326987775908ULL);
}

TEST(Hermitian, PsdAndEigen) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -0.5;
  EXPECT_TRUE(is_hermitian(m, 1e-14));
  EXPECT_NEAR(min_eigenvalue_hermitian(m), -0.5, 1e-14);
  EXPECT_FALSE(is_psd(m, 1e-12));
  EXPECT_TRUE(is_psd(projector(random_unit_vector(3, 1)), 1e-12));
}

TEST(Schmidt, ProductStateHasRankOne) {
  const CVector a = random_unit_vector(2, 1), b = random_unit_vector(3, 2);
  const auto s = schmidt(StateVector(tensor(a, b), {2, 3}));
  EXPECT_EQ(s.rank(), 1u);
  EXPECT_NEAR(s.coefficients[0], 1.0, 1e-12);
}

TEST(Schmidt, BellState) {
  CVector v = CVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  const auto s = schmidt(StateVector(v, {2, 2}));
  ASSERT_EQ(s.coefficients.size(), 2u);
  EXPECT_NEAR(s.coefficients[0], 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(s.coefficients[1], 1.0 / std::sqrt(2.0), 1e-14);
  EXPECT_EQ(s.rank(), 2u);
}

TEST(Schmidt, NeedsTwoFactors) {
  EXPECT_THROW(schmidt(StateVector(random_unit_vector(4, 0), {4})), UsageError);
}

TEST(Schmidt, ReconstructsRandomState) {
  const StateVector v(random_unit_vector(12, 5), {3, 4});
  const auto s = schmidt(v);
  CVector r = CVector::Zero(12);
  for (std::size_t i = 0; i < s.coefficients.size(); ++i)
    r += s.coefficients[i] * tensor(CVector(s.left_vectors.col(static_cast<Eigen::Index>(i))),
                                    CVector(s.right_vectors.col(static_cast<Eigen::Index>(i))));
  EXPECT_LT((r - v.amplitudes).norm(), 1e-12);
  for (std::size_t i = 1; i < s.coefficients.size(); ++i) EXPECT_GE(s.coefficients[i - 1], s.coefficients[i]);
}

TEST(Schmidt, NonContiguousCut) {
  // |a>|b>|c> with a, c entangled only through the middle cut
  const CVector a = random_unit_vector(2, 1), b = random_unit_vector(2, 2), c = random_unit_vector(2, 3);
  const StateVector v(tensor(tensor(a, b), c), {2, 2, 2});
  const auto s = schmidt(v, Bipartition{{0, 2}});
  EXPECT_EQ(s.rank(), 1u);
  EXPECT_EQ(reshape_bipartite(v, Bipartition{{0, 2}}).rows(), 4);
}

TEST(Swap, ExchangesFactors) {
  const CMatrix a = random_unitary(2, 1), b = random_unitary(3, 2);
  EXPECT_LT((swap_factors(tensor(a, b), 2, 3) - tensor(b, a)).norm(), 1e-13);
}

TEST(Validation, NonSquareAndNonFinite) {
  EXPECT_THROW(require_square(CMatrix::Zero(2, 3), "m"), DimensionError);
  CMatrix m = identity(2);
  m(0, 0) = cplx(std::nan(""), 0.0);
  EXPECT_THROW(require_finite(m, "m"), ValidationError);
}
