#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "telecode/group_words.hpp"
#include "telecode/matrix_core.hpp"
#include "telecode/monomial.hpp"

namespace telecode {

// Alice's space C² ⊗ H_N uses index b*N + (j-1); Bob's H_N ⊗ C² uses (j-1)*2 + b.
// |ξ_N> = H_N^{-1/2} Σ_{j=1}^{N} j^{-1/2} |j>|j>.

std::vector<double> xi_coefficients(std::size_t n_levels);
StateVector xi_state(std::size_t n_levels);

struct EmbezzlementFamily {
  std::size_t levels = 0;
  std::vector<double> xi;  // Schmidt coefficients of ξ_N, nonincreasing
  MonomialOp alice;        // U on C² ⊗ H_N
  MonomialOp bob;          // V on H_N ⊗ C²
  BiState h0;              // |0>|ξ>|0>
  BiState h1;              // |1>|ξ>|1>
  double err = 0.0;        // ||(U ⊗ V) h0 - (h0 + h1)/√2||

  std::size_t dim_alice() const { return 2 * levels; }
  std::size_t dim_bob() const { return 2 * levels; }
};

// U, V pair the sorted Schmidt coefficients of |0>|ξ>|0> with those of
// (|0ξ0> + |1ξ1>)/√2 by rank; the unused source vectors are completed to a
// permutation, Bob's in reverse rank order.
EmbezzlementFamily embezzle_unitaries(std::size_t n_levels);

// err from the closed-form coefficient lists (no operators involved).
double embezzlement_error_closed_form(std::size_t n_levels);

// Local Paulis on the qubit factors.
MonomialOp alice_x(std::size_t n_levels);
MonomialOp alice_z(std::size_t n_levels);
MonomialOp bob_x(std::size_t n_levels);
MonomialOp bob_z(std::size_t n_levels);

// Generator images of a group on Alice's and Bob's sides together with the window
// vectors h_0 .. h_{k-1}.
struct RepPair {
  std::string name;
  SpecPtr group;
  std::vector<MonomialOp> left;   // one per generator
  std::vector<MonomialOp> right;  // one per generator
  std::vector<BiState> window;
  std::vector<std::string> window_names;
  std::size_t levels = 0;
  double err = 0.0;

  std::size_t dim_left() const { return left.empty() ? 0 : left[0].dim(); }
  std::size_t dim_right() const { return right.empty() ? 0 : right[0].dim(); }
  MonomialOp left_word(const Word& w) const;
  MonomialOp right_word(const Word& w) const;
  CMatrix gram() const;  // W^† W
};

enum class SignConvention {
  value_consistent,  // π(g01) carries an extra factor -1 so the limit matches the correlation table
  verbatim,          // π(g01) = (X ⊗ 1) U (Z ⊗ 1) exactly as written
};

// F4 with generators g00, g10, g01, g11.
RepPair rep_pair_f4(const EmbezzlementFamily& fam, SignConvention convention = SignConvention::value_consistent);
RepPair rep_pair_f4(std::size_t n_levels, SignConvention convention = SignConvention::value_consistent);
// F3 with generators g0 ↦ Z, g1 ↦ U, g2 ↦ X U.
RepPair rep_pair_f3(const EmbezzlementFamily& fam);
RepPair rep_pair_f3(std::size_t n_levels);
// ℤ2*ℤ2*ℤ with s0 ↦ Z, s1 ↦ X = π(g2 g1^{-1}), g ↦ U.
RepPair rep_pair_zzf(const EmbezzlementFamily& fam);

struct WordPair {
  Word left;
  Word right;
};

// Block for each pair: entry (i,j) = <h_i| π1(left) ⊗ π2(right) |h_j>.
std::vector<CMatrix> correlation_eval(const RepPair& rep, const std::vector<WordPair>& pairs);
CMatrix correlation_block(const RepPair& rep, const MonomialOp& left, const MonomialOp& right);

// Dense (U ⊗ V) and |h0>, for brute-force checks at small N.
CMatrix dense_alice(const EmbezzlementFamily& fam);
CMatrix dense_bob(const EmbezzlementFamily& fam);

}  // namespace telecode
