#include <gtest/gtest.h>

#include "telecode/errors.hpp"
#include "telecode/monomial.hpp"

using namespace telecode;

namespace {
MonomialOp sample(std::size_t n, std::uint64_t seed) {
  std::vector<std::uint32_t> t(n);
  std::vector<cplx> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<std::uint32_t>((2 * n - 1 - i + seed) % n);
    p[i] = std::polar(1.0, 0.7 * static_cast<double>(i + seed));
  }
  return MonomialOp(t, p);
}
}  // namespace

TEST(Monomial, MatchesDenseAlgebra) {
  const auto a = sample(5, 1), b = sample(5, 2);
  EXPECT_LT(((a * b).dense() - a.dense() * b.dense()).norm(), 1e-13);
  EXPECT_LT((a.adjoint().dense() - a.dense().adjoint()).norm(), 1e-13);
  EXPECT_LT((a.pow(-3).dense() - (a.dense().adjoint() * a.dense().adjoint() * a.dense().adjoint())).norm(), 1e-12);
  EXPECT_TRUE((a * a.adjoint()).is_identity(1e-13));
}

TEST(Monomial, FromDenseRoundtrip) {
  const auto a = sample(4, 3);
  EXPECT_LT(frobenius_distance(MonomialOp::from_dense(a.dense()), a), 1e-14);
  EXPECT_THROW(MonomialOp::from_dense(CMatrix::Constant(2, 2, 0.5)), ValidationError);
}

TEST(Monomial, RejectsNonPermutation) {
  EXPECT_THROW(MonomialOp::permutation({0, 0}), ValidationError);
}

TEST(Monomial, KronAndDirectSum) {
  const auto a = sample(2, 1), b = sample(3, 2);
  EXPECT_LT((kron(a, b).dense() - tensor(a.dense(), b.dense())).norm(), 1e-13);
  const CMatrix ds = direct_sum({a, b}).dense();
  EXPECT_LT((ds.topLeftCorner(2, 2) - a.dense()).norm(), 1e-14);
  EXPECT_LT((ds.bottomRightCorner(3, 3) - b.dense()).norm(), 1e-14);
}

TEST(BlockMonomial, OrderTwoDilation) {
  const auto w = sample(3, 4);
  const auto id = MonomialOp::identity(3);
  const auto s2 = block_monomial(2, 3, {{1, 0, w}, {0, 1, w.adjoint()}});
  const auto s3 = block_monomial(2, 3, {{0, 1, id}, {1, 0, id}});
  EXPECT_TRUE(s2.is_self_adjoint());
  EXPECT_TRUE(s3.is_self_adjoint());
  EXPECT_TRUE((s2 * s2).is_identity());
  const CMatrix prod = (s2 * s3).dense();
  EXPECT_LT((prod.topLeftCorner(3, 3) - w.dense()).norm(), 1e-14);
}

TEST(BlockMonomial, RejectsNonPermutationEdges) {
  const auto id = MonomialOp::identity(2);
  EXPECT_THROW(block_monomial(2, 2, {{0, 0, id}, {1, 0, id}}), ConsistencyError);
  EXPECT_THROW(block_monomial(2, 2, {{0, 0, id}}), ConsistencyError);
}

TEST(BiState, ApplyMatchesDense) {
  const auto a = sample(3, 1), b = sample(2, 5);
  CVector v(6);
  for (int i = 0; i < 6; ++i) v(i) = cplx(i + 1, -i);
  const StateVector sv(v, {3, 2});
  const BiState s = BiState::from_dense(sv);
  const CVector want = tensor(a.dense(), b.dense()) * v;
  EXPECT_LT((s.apply(a, b).dense().amplitudes - want).norm(), 1e-12);
  EXPECT_NEAR(s.norm(), v.norm(), 1e-12);
  EXPECT_LT(std::abs(s.inner(s.apply(a, b)) - v.dot(want)), 1e-12);
}

TEST(BiState, EmbedPlacesSummand) {
  CVector v = CVector::Zero(4);
  v(3) = 1.0;
  const BiState s = BiState::from_dense(StateVector(v, {2, 2}));
  const BiState e = s.embed(1, 3, 2, 3);
  EXPECT_EQ(e.dim_a(), 6u);
  EXPECT_EQ(e.entries().size(), 1u);
  EXPECT_EQ(e.entries()[0].first, (2u + 1u) * 6u + (4u + 1u));
}
