#pragma once

#include <vector>

#include "telecode/matrix_core.hpp"
#include "telecode/monomial.hpp"

namespace telecode {

// Convention used throughout: X = diag(ω^j) is the phase operator and Z|j> = |j+1>
// is the cyclic shift, ω = e^{2πi/d}. Hence XZ = ω ZX. T_{j,k} = X^j Z^k.
// All index arithmetic is mod d.

int mod(long value, int d);
cplx root_of_unity(int d, long exponent);  // ω^exponent, exponent reduced mod d first

// phase · T_{j,k}
struct PauliLabel {
  int d = 2;
  cplx phase = 1.0;
  int j = 0;
  int k = 0;

  PauliLabel() = default;
  PauliLabel(int d, cplx phase, int j, int k);  // validates and reduces j, k mod d
  static PauliLabel plain(int d, int j, int k) { return PauliLabel(d, 1.0, j, k); }
};

struct EntangledBasis {
  int d = 2;
  std::vector<StateVector> vectors;  // index j*d + k
  const StateVector& at(int j, int k) const { return vectors[static_cast<std::size_t>(j * d + k)]; }
};

CMatrix pauli_x(int d);
CMatrix pauli_z(int d);
MonomialOp pauli_x_monomial(int d);
MonomialOp pauli_z_monomial(int d);

CMatrix t_op(const PauliLabel& label);
CMatrix t_op(int d, int j, int k);

// (T_{j,k} ⊗ 1)|φ>, |φ> = d^{-1/2} Σ|ll>
StateVector phi_vec(int d, int j, int k);
EntangledBasis entangled_basis(int d);

// Label of T_a · T_b^† (phases included).
PauliLabel pauli_mul(const PauliLabel& a, const PauliLabel& b_adjoint);
PauliLabel pauli_adjoint(const PauliLabel& a);             // label of T_a^†
PauliLabel pauli_compose(const PauliLabel& a, const PauliLabel& b);  // label of T_a · T_b

// Alternating word U_{j1,k1}^{e1} ··· U_{jn,kn}^{en} (T_{tail} ⊗ 1), where
// U_{j,k} = (T_{j,k} ⊗ 1)^† U (T_{j,k} ⊗ 1). Collapsing neighbouring T's gives
//   λ · T_{j1,k1}^† U^{e1} T_{Δ1}^† U^{e2} ··· U^{en} T_{jn + j_tail, kn + k_tail}
// with Δa = (j_{a+1} - j_a, k_{a+1} - k_a). word_lambda returns that λ.
struct PauliLetter {
  int j = 0;
  int k = 0;
  long exponent = 1;
};

struct PauliWord {
  int d = 2;
  std::vector<PauliLetter> letters;
  int tail_j = 0;
  int tail_k = 0;
};

// The T labels of the collapsed form: n + 1 labels, each with unit phase;
// the first n are to be read as adjoints.
std::vector<PauliLabel> collapsed_labels(const PauliWord& word);

// Closed form: λ = ω^{Σ_{a<n}[j_{a+1}(k_a - k_{a+1}) + (j_{a+1} - j_a)(k_{a+1} - k_a)] - k_n j_tail}.
cplx word_lambda(const PauliWord& word);
// Same λ obtained by folding pauli_mul over neighbouring T factors.
cplx word_lambda_iterated(const PauliWord& word);
// Alternative product-exponent expression exp(2πi j_tail (k_n + k_tail) Σ_{l<n} j_{l+1}(k_l - k_{l+1}) / d).
// Kept for comparison only; it does not match the matrix product in general.
cplx word_lambda_product_exponent(const PauliWord& word);

}  // namespace telecode
