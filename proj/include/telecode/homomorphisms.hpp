#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "telecode/checks.hpp"
#include "telecode/matrix_core.hpp"

namespace telecode {

// Unitary images of free generators. With d_ctx set there are d² of them,
// generator g_{l,m} at index l*d + m.
class FreeRep {
 public:
  FreeRep(std::vector<CMatrix> gens, int d_ctx = 0, double tol = 1e-10);

  std::size_t num_gens() const { return gens_.size(); }
  std::size_t dim() const { return gens_.empty() ? 0 : static_cast<std::size_t>(gens_[0].rows()); }
  int d() const { return d_; }
  const std::vector<CMatrix>& gens() const { return gens_; }
  const CMatrix& gen(int l, int m) const;

 private:
  std::vector<CMatrix> gens_;
  int d_ = 0;
};

// Blocks u_{j,k} (n x n, index j*d + k) whose matrix U = Σ e_{jk} ⊗ u_{jk} is unitary.
class BrownRep {
 public:
  BrownRep(int d, std::vector<CMatrix> blocks, double tol = 1e-10);
  static BrownRep from_fundamental(int d, const CMatrix& u, double tol = 1e-10);

  int d() const { return d_; }
  std::size_t n() const { return n_; }
  const std::vector<CMatrix>& blocks() const { return blocks_; }
  const CMatrix& block(int j, int k) const;
  CMatrix fundamental() const;

 private:
  int d_;
  std::size_t n_;
  std::vector<CMatrix> blocks_;
};

FreeRep random_free_rep(int d, std::size_t n, std::uint64_t seed);
BrownRep random_brown_rep(int d, std::size_t n, std::uint64_t seed);

// Σ e_{jk} ⊗ x_{jk} for any d² family of equal square blocks.
CMatrix assemble_fundamental(int d, const std::vector<CMatrix>& blocks);

// σ1(u_{jk}) = (1/d) Σ_{l,m} ω^{-(j-k)l} e_{j-m,k-m} ⊗ g_{lm}; index j*d + k.
std::vector<CMatrix> sigma1_images(const FreeRep& free);
BrownRep sigma1(const FreeRep& free);  // throws ValidationError if the images are not a Brown family
// Σ_{l,m} |φ_{-l,m}><φ_{-l,m}| ⊗ g_{lm}, matrix factor first.
CMatrix sigma1_projector_form(const FreeRep& free);

// σ2(g_{lm}) = Σ_{j,k} ω^{(j-k)l} e_{j-m,k-m} ⊗ u_{jk}; index l*d + m.
std::vector<CMatrix> sigma2_images(const BrownRep& brown);
// (T_{l,-m} ⊗ 1) U (T_{l,-m} ⊗ 1)^†
std::vector<CMatrix> sigma2_conjugation_images(const BrownRep& brown);
FreeRep sigma2(const BrownRep& brown);

// α1(u_{jk}) = ω^{j-k} u_{jk}; α2(u_{jk}) = u_{j+1,k+1}.
BrownRep alpha1(const BrownRep& b);
BrownRep alpha2(const BrownRep& b);
// α1^l α2^n: u_{jk} ↦ ω^{l(j-k)} u_{j+n,k+n}. Negative powers allowed.
BrownRep alpha_power(const BrownRep& b, long l, long n);
// β1(g_{jk}) = g_{j+1,k}; β2(g_{jk}) = g_{j,k-1}.
FreeRep beta1(const FreeRep& f);
FreeRep beta2(const FreeRep& f);
// β1^a β2^b: g_{lm} ↦ g_{l+a,m-b}.
FreeRep beta_power(const FreeRep& f, long a, long b);

// V|jk> = ω^{-jk} |φ_{jk}>
CMatrix v_unitary(int d);
CheckList check_ue(int d, double tol = 1e-12);

// π(A) = Σ_{l,m} e_ll ⊗ e_mm ⊗ α1^{-l} α2^{-m}(A) with v = Z ⊗ X ⊗ 1, w = 1 ⊗ Z ⊗ 1.
struct CovariantEmbedding {
  int d = 2;
  std::size_t n = 1;
  std::vector<CMatrix> images;  // π(u_{jk}), index j*d + k
  CMatrix unit;                 // π(1)
  CMatrix v;
  CMatrix w;
};

CovariantEmbedding covariant_embedding(const BrownRep& brown);
CheckList check_covariance(const BrownRep& brown, double tol = 1e-10);

// Adds `delta` to entry (0,0) of the computed left-hand image for generator (j,k).
struct BlockFault {
  int j = 0;
  int k = 0;
  double delta = 1e-3;
};

// (id ⊗ σ2)∘σ1(u_{jk}) = Σ_{l,n} |φ_{-l,-n}><φ_{-l,-n}| ⊗ α1^l α2^n(u_{jk}) and
// (V^† ⊗ 1)[(id ⊗ σ2)∘σ1(u_{jk})](V ⊗ 1) = π(u_{jk}), for every (j,k).
CheckList compose_identity_check(const BrownRep& brown, double tol = 1e-10,
                                 std::optional<BlockFault> fault = std::nullopt);
// (id ⊗ σ1)∘σ2(g_{lm}) = Σ_{a,b} |φ_{ab}><φ_{ab}| ⊗ β1^{-a} β2^{-b}(g_{lm}), for every (l,m).
CheckList compose_identity_check_free(const FreeRep& free, double tol = 1e-10,
                                      std::optional<BlockFault> fault = std::nullopt);

}  // namespace telecode
