#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "telecode/checks.hpp"
#include "telecode/embezzlement.hpp"
#include "telecode/group_words.hpp"
#include "telecode/matrix_core.hpp"

namespace telecode {

struct PVMFamily {
  int x = 0;
  std::vector<CMatrix> projections;
};

// p_a = (1/m) Σ_t e^{-2πi a t/m} u^t. Throws UsageError if ||u^m - 1|| > order_tol.
PVMFamily spectral_pvm(const CMatrix& u, int m, int x = 0, double order_tol = 1e-8);
CheckList pvm_checks(const PVMFamily& pvm, double tol = 1e-10);

// One constrained matrix entry. `exact` marks entries the realizer fixes by
// construction (as opposed to entries limited by the embezzlement error).
struct Constraint {
  std::size_t row = 0;
  std::size_t col = 0;
  cplx value = 0.0;
  bool exact = false;
};

struct CorrelationLabel {
  Word left;
  Word right;
  std::string text() const;  // "(left, right)"
};

struct CorrelationTarget {
  std::string name;
  std::string description;
  std::size_t n = 2;
  SpecPtr group;
  std::vector<CorrelationLabel> labels;
  std::vector<std::vector<Constraint>> constraints;  // parallel to labels
};

CorrelationTarget target_catalog(std::string_view name);
std::vector<std::string> catalog_names();

struct CorrelationTensor {
  struct Provenance {
    std::string rep;
    std::size_t levels = 0;
    std::size_t dim_left = 0;
    std::size_t dim_right = 0;
    std::uint64_t seed = 0;
  };
  std::size_t n = 0;
  std::vector<CorrelationLabel> labels;
  std::vector<CMatrix> entries;
  Provenance provenance;
};

struct EntryDeviation {
  std::string label;
  std::size_t row = 0;
  std::size_t col = 0;
  cplx target = 0.0;
  cplx value = 0.0;
  double deviation = 0.0;
  bool exact = false;
};

std::vector<EntryDeviation> deviations(const CorrelationTensor& t, const CorrelationTarget& target);
// max |entry - constraint| over constrained entries; throws UsageError on label mismatch.
double distance(const CorrelationTensor& t, const CorrelationTarget& target);

// (gram + eps)^{-1/2}
CMatrix ucp_normalizer(const CMatrix& gram, double eps = 1e-8);
CorrelationTensor ucp_normalize(const CorrelationTensor& t, const CMatrix& gram, double eps = 1e-8);

// Dilated representations. Every σ_i / a / b image is a block-monomial operator
// whose designated words act on summand 0 exactly like the ℤ2*ℤ2*ℤ (resp. F3)
// representation built from the embezzling pair.
//
// *4 ℤ2 on A0 ⊕ A1: σ0 = Z ⊕ Z, σ1 = X ⊕ X, σ2 = [[0, U], [U^†, 0]], σ3 = [[0, 1], [1, 0]];
// window h0, h1 and h2 = (σ3 ⊗ σ3) h0.
RepPair rep_pair_q3(const EmbezzlementFamily& fam);
// *3 ℤ2 on A0 ⊕ A1 ⊕ A2: σ0 = Z on A0 and swaps A1, A2; σ1 = X on A0 and
// [[0, U^†], [U, 0]] on A1 ⊕ A2; σ2 swaps A0 and A1. Then σ2 σ0 σ1 σ2 = U on A0.
// Window k0, k1, k2 = (σ2⊗σ2)k0, k3 = (σ1⊗σ1)k2, k4 = (σ0⊗σ0)k3.
RepPair rep_pair_q5(const EmbezzlementFamily& fam);
// ℤ3*ℤ3 on six summands {0, p1, p2, q1, q2, r3}: a cycles 0→p1→p2→0 and
// q1→q2→r3→q1 with identity blocks; b cycles 0→q1→q2→0 with blocks 1, X, X and
// r3→p1→p2→r3 with blocks ZU, Z, U^{-1}. On summand 0: aba = Z, bab = X, ab²a²b = U.
// Window ζ0 .. ζ12.
RepPair rep_pair_q13(const EmbezzlementFamily& fam);

// Largest deviation of `big` restricted to summand `block` from `small`
// (Frobenius norm of the difference of the restricted columns).
double restricted_distance(const MonomialOp& big, const MonomialOp& small, std::size_t block);

struct PvmCorrelation {
  std::size_t x = 0;
  std::size_t y = 0;
  int a = 0;
  int b = 0;
  CMatrix value;  // Ψ(p_a^x ⊗ q_b^y) on the full window
};

struct RealizeOptions {
  double ucp_eps = 1e-8;
  double exact_tol = 1e-10;
  SignConvention convention = SignConvention::value_consistent;
};

struct Realization {
  std::string target;
  std::size_t levels = 0;
  double embezzlement_err = 0.0;
  CorrelationTensor tensor;      // catalog labels on the first n window vectors
  CorrelationTensor normalized;  // after (Ψ(1)+ε)^{-1/2} · (Ψ(1)+ε)^{-1/2}
  std::vector<EntryDeviation> entry_deviations;
  double distance = 0.0;
  double normalized_distance = 0.0;
  std::vector<std::string> window_names;
  CMatrix gram;                            // full window Gram matrix
  CorrelationTensor generator_tensor;      // all pairs over {1} ∪ letters, full window
  CorrelationTensor generator_normalized;
  std::vector<PvmCorrelation> pvm;         // only for groups of finite-order generators
  CheckList chain_checks;
};

Realization realize(const CorrelationTarget& target, std::size_t levels, const RealizeOptions& opts = {});

// Schmidt obstruction for
//   <h0|u_j ⊗ v_k|h0> = 1/√2,  <h1|u_j ⊗ v_k|h0> = (-1)^{j-k}/√2   (j,k ∈ {0,1}).
enum class ObstructionCase { relations_violated, schmidt_contradiction, inconclusive };

std::string to_string(ObstructionCase c);

struct ObstructionVerdict {
  ObstructionCase kind = ObstructionCase::relations_violated;
  double residual = 0.0;         // max_{j,k} ||u_j⊗v_k h0 - (h0 + (-1)^{j-k} h1)/√2||
  double scalar_residual = 0.0;  // max deviation of the eight inner products
  double splitting_residual = 0.0;
  std::size_t rank_h0 = 0;
  std::size_t rank_h1 = 0;
  std::size_t rank_eta = 0;
  std::size_t rank_p1 = 0;
  std::size_t rank_p2 = 0;
  std::string summary;
};

struct ObstructionCertificate {
  CMatrix u0, u1, v0, v1;
  StateVector h0, h1;
};

// Haar-like unitaries and a random orthonormal pair h0, h1 on C^na ⊗ C^nb.
ObstructionCertificate random_certificate(std::size_t na, std::size_t nb, std::uint64_t seed);

ObstructionVerdict obstruction_check(const ObstructionCertificate& c, double tol, double rank_tol = 1e-8);
ObstructionVerdict obstruction_check(const CMatrix& u0, const CMatrix& u1, const CMatrix& v0, const CMatrix& v1,
                                     const StateVector& h0, const StateVector& h1, double tol,
                                     double rank_tol = 1e-8);

// ℓ2(ℤ) truncated to indices -D..D (stored at offset D); u is the cyclic shift
// and σ = -1 on j ≥ 0. h0 ∝ Σ_{j=-D}^{-1} 2^{j/2}|jj>, h1 = |00>, u0 = v0 = u, u1 = v1 = σu.
struct ShiftConstruction {
  int depth = 0;
  CMatrix u0, u1, v0, v1;
  CMatrix sigma;
  CMatrix shift;
  StateVector h0, h1;
};

ShiftConstruction shift_construction(int depth);
// Closed-form relation residual of shift_construction(depth).
double shift_residual_closed_form(int depth);

// (a ⊗ b) v without forming a ⊗ b.
CVector apply_local(const CMatrix& a, const CMatrix& b, const CVector& v);

}  // namespace telecode
