#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "telecode/matrix_core.hpp"

namespace telecode {

// Permutation-with-phase operator: op|i> = phase[i] |target[i]>.
// Every operator in the embezzlement representations has this form, which keeps
// N = 4096 sweeps linear in the Hilbert-space dimension.
class MonomialOp {
 public:
  MonomialOp() = default;
  MonomialOp(std::vector<std::uint32_t> target, std::vector<cplx> phase);

  static MonomialOp identity(std::size_t n);
  static MonomialOp permutation(std::vector<std::uint32_t> target);
  static MonomialOp diagonal(std::vector<cplx> phase);
  // Throws ValidationError unless every column of m has exactly one nonzero entry
  // of modulus one (within tol) and the rows are hit once each.
  static MonomialOp from_dense(const CMatrix& m, double tol = 1e-12);

  std::size_t dim() const { return target_.size(); }
  std::uint32_t target(std::size_t i) const { return target_[i]; }
  cplx phase(std::size_t i) const { return phase_[i]; }

  MonomialOp operator*(const MonomialOp& rhs) const;  // this after rhs
  MonomialOp adjoint() const;
  MonomialOp pow(long exponent) const;
  CMatrix dense() const;
  bool is_identity(double tol = 1e-12) const;
  bool is_self_adjoint(double tol = 1e-12) const;

 private:
  std::vector<std::uint32_t> target_;
  std::vector<cplx> phase_;
};

MonomialOp kron(const MonomialOp& a, const MonomialOp& b);
// Block-diagonal a ⊕ b ⊕ ...
MonomialOp direct_sum(const std::vector<MonomialOp>& blocks);

// One block of a block-monomial operator on `count` summands of equal dimension:
// maps summand `from` to summand `to` through `op`.
struct BlockEdge {
  std::size_t from;
  std::size_t to;
  MonomialOp op;
};
MonomialOp block_monomial(std::size_t count, std::size_t block_dim,
                          const std::vector<BlockEdge>& edges);

// ||a - b||_F computed without densifying.
double frobenius_distance(const MonomialOp& a, const MonomialOp& b);

// Sparse vector in H_A ⊗ H_B, entries keyed by a*dim_B + b and kept sorted.
class BiState {
 public:
  using Entry = std::pair<std::uint64_t, cplx>;

  BiState() = default;
  BiState(std::size_t dim_a, std::size_t dim_b, std::vector<Entry> entries);

  static BiState from_dense(const StateVector& v);  // needs factor_dims {dim_a, dim_b}

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const std::vector<Entry>& entries() const { return entries_; }

  BiState apply(const MonomialOp& left, const MonomialOp& right) const;
  BiState apply_left(const MonomialOp& left) const;
  BiState apply_right(const MonomialOp& right) const;

  cplx inner(const BiState& ket) const;  // <this|ket>
  double norm() const;
  double distance(const BiState& other) const;

  BiState operator+(const BiState& rhs) const;
  BiState operator-(const BiState& rhs) const;
  BiState operator*(cplx s) const;

  StateVector dense() const;

  // Places this state in summand (block_a, block_b) of (H_A^{⊕count_a}) ⊗ (H_B^{⊕count_b}).
  BiState embed(std::size_t block_a, std::size_t count_a, std::size_t block_b, std::size_t count_b) const;

 private:
  std::size_t dim_a_ = 0;
  std::size_t dim_b_ = 0;
  std::vector<Entry> entries_;
  void normalize_storage();
};

}  // namespace telecode
