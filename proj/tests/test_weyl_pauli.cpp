#include <gtest/gtest.h>

#include <random>

#include "telecode/errors.hpp"
#include "telecode/group_words.hpp"
#include "telecode/homomorphisms.hpp"
#include "telecode/weyl_pauli.hpp"

using namespace telecode;

TEST(Pauli, ConventionOnBasis) {
  // X is the phase operator, Z the cyclic shift
  const int d = 3;
  const CMatrix x = pauli_x(d), z = pauli_z(d);
  for (int i = 0; i < d; ++i) {
    EXPECT_LT(std::abs(x(i, i) - root_of_unity(d, i)), 1e-15);
    EXPECT_EQ(z((i + 1) % d, i), cplx(1.0));
  }
}

TEST(Pauli, OrdersAndCommutation) {
  for (int d = 2; d <= 6; ++d) {
    const CMatrix x = pauli_x(d), z = pauli_z(d), id = identity(static_cast<std::size_t>(d));
    EXPECT_LT((unitary_power(x, d) - id).norm(), 1e-12);
    EXPECT_LT((unitary_power(z, d) - id).norm(), 1e-12);
    EXPECT_LT((x * z - root_of_unity(d, 1) * z * x).norm(), 1e-12);
  }
}

TEST(Pauli, TOpIsXjZk) {
  for (int d = 2; d <= 5; ++d)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        EXPECT_LT((t_op(d, j, k) - unitary_power(pauli_x(d), j) * unitary_power(pauli_z(d), k)).norm(), 1e-12);
}

TEST(Pauli, LabelValidation) {
  EXPECT_THROW(PauliLabel(1, 1.0, 0, 0), UsageError);
  EXPECT_THROW(PauliLabel(2, 2.0, 0, 0), ValidationError);
  const PauliLabel p(3, 1.0, -1, 4);
  EXPECT_EQ(p.j, 2);
  EXPECT_EQ(p.k, 1);
}

TEST(Pauli, MulMatchesMatrices) {
  for (int d = 2; d <= 5; ++d)
    for (int a = 0; a < d * d; ++a)
      for (int b = 0; b < d * d; ++b) {
        const PauliLabel x(d, root_of_unity(d, a), a / d, a % d), y(d, root_of_unity(2 * d, b), b / d, b % d);
        EXPECT_LT((t_op(pauli_mul(x, y)) - t_op(x) * t_op(y).adjoint()).norm(), 1e-12);
        EXPECT_LT((t_op(pauli_compose(x, y)) - t_op(x) * t_op(y)).norm(), 1e-12);
        EXPECT_LT((t_op(pauli_adjoint(x)) - t_op(x).adjoint()).norm(), 1e-12);
      }
}

TEST(Pauli, MulPhaseFormula) {
  // T_a T_b^† = ω^{b.j (a.k - b.k)} T_{a - b}
  const int d = 4;
  const PauliLabel a = PauliLabel::plain(d, 3, 1), b = PauliLabel::plain(d, 1, 2);
  const PauliLabel c = pauli_mul(a, b);
  EXPECT_EQ(c.j, 2);
  EXPECT_EQ(c.k, 3);
  EXPECT_LT(std::abs(c.phase - root_of_unity(d, 1 * (1 - 2))), 1e-14);
}

TEST(EntangledBasisTest, OrthonormalAndGenerated) {
  for (int d = 2; d <= 5; ++d) {
    const auto basis = entangled_basis(d);
    const StateVector& phi = basis.at(0, 0);
    for (int a = 0; a < d * d; ++a) {
      const int j = a / d, k = a % d;
      const CVector want = tensor(t_op(d, j, k), identity(static_cast<std::size_t>(d))) * phi.amplitudes;
      EXPECT_LT((basis.at(j, k).amplitudes - want).norm(), 1e-12);
      for (int b = 0; b < d * d; ++b) {
        const cplx ip = basis.vectors[static_cast<std::size_t>(a)].amplitudes.dot(basis.vectors[static_cast<std::size_t>(b)].amplitudes);
        EXPECT_LT(std::abs(ip - (a == b ? 1.0 : 0.0)), 1e-12);
      }
    }
  }
}

TEST(Lambda, SingleLetterHasNoPhase) {
  PauliWord w{3, {{1, 2, 1}}, 0, 0};
  EXPECT_LT(std::abs(word_lambda(w) - 1.0), 1e-14);
}

TEST(Lambda, TailPhase) {
  // one letter (j, k) with tail (a, b): λ = ω^{-k a}
  PauliWord w{3, {{1, 2, 1}}, 2, 0};
  EXPECT_LT(std::abs(word_lambda(w) - root_of_unity(3, -4)), 1e-14);
  EXPECT_LT(std::abs(word_lambda_iterated(w) - word_lambda(w)), 1e-14);
}

TEST(Lambda, ClosedFormMatchesIteratedAndMatrix) {
  std::mt19937_64 rng(11);
  for (int d = 2; d <= 4; ++d) {
    const BrownRep brown = random_brown_rep(d, 2, 5 + d);
    std::uniform_int_distribution<int> lab(0, d - 1), len(1, 4), ex(-2, 2);
    for (int i = 0; i < 60; ++i) {
      PauliWord w{d, {}, lab(rng), lab(rng)};
      const int n = len(rng);
      while (static_cast<int>(w.letters.size()) < n) {
        PauliLetter l{lab(rng), lab(rng), 0};
        while (l.exponent == 0) l.exponent = ex(rng);
        if (!w.letters.empty() && w.letters.back().j == l.j && w.letters.back().k == l.k) continue;
        w.letters.push_back(l);
      }
      EXPECT_LT(std::abs(word_lambda(w) - word_lambda_iterated(w)), 1e-10);
      const CrossedWord cw = CrossedWord::from_letters(d, w.letters, w.tail_j, w.tail_k);
      EXPECT_LT((sigma2_word_matrix(brown, cw) - collapsed_word_matrix(brown, sigma2_word_image(cw))).norm(), 1e-10);
    }
  }
}

TEST(Lambda, ProductExponentFormDisagreesSomewhere) {
  int mismatches = 0;
  for (int j1 = 0; j1 < 3; ++j1)
    for (int k2 = 0; k2 < 3; ++k2)
      for (int tj = 0; tj < 3; ++tj) {
        PauliWord w{3, {{j1, 0, 1}, {1, k2, 1}}, tj, 1};
        if (w.letters[0].j == 1 && w.letters[0].k == k2) continue;
        if (std::abs(word_lambda_product_exponent(w) - word_lambda(w)) > 1e-9) ++mismatches;
      }
  EXPECT_GT(mismatches, 0);
}

TEST(Lambda, EmptyWordRejected) {
  PauliWord w{2, {}, 0, 0};
  EXPECT_THROW(word_lambda(w), UsageError);
}
