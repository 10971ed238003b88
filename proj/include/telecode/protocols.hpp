#pragma once

#include <functional>
#include <vector>

#include "telecode/matrix_core.hpp"

namespace telecode {

class DensityMatrix {
 public:
  // Throws ValidationError unless m is Hermitian, trace one and PSD within tol.
  explicit DensityMatrix(CMatrix m, double tol = 1e-10);

  static DensityMatrix maximally_mixed(int d);
  static DensityMatrix random(int d, std::uint64_t seed);  // full-rank, Ginibre-induced

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }

 private:
  CMatrix m_;
};

// Distribution over pairs (j,k), index j*d + k.
class ClassicalDist {
 public:
  ClassicalDist(int d, std::vector<double> probs, double tol = 1e-12);

  static ClassicalDist point_mass(int d, int j, int k);
  static ClassicalDist uniform(int d);
  static ClassicalDist random(int d, std::uint64_t seed);

  int d() const { return d_; }
  const std::vector<double>& probs() const { return p_; }
  double at(int j, int k) const { return p_[static_cast<std::size_t>(j * d_ + k)]; }

 private:
  int d_;
  std::vector<double> p_;
};

// Outcome (j,k) of Alice's Bell measurement leaves Bob with T_{jk}^† ρ T_{jk},
// each with probability 1/d².
struct MeasurementRecord {
  int d = 2;
  double weight = 0.25;
  std::vector<CMatrix> blocks;  // index j*d + k
  const CMatrix& at(int j, int k) const { return blocks[static_cast<std::size_t>(j * d + k)]; }
};

MeasurementRecord alice_measurement(const DensityMatrix& rho);
DensityMatrix teleport(const DensityMatrix& rho);

CMatrix superdense_encode(const ClassicalDist& p);  // Σ p_jk |φ_jk><φ_jk|
ClassicalDist superdense_decode(const CMatrix& state, int d);
ClassicalDist superdense(const ClassicalDist& p);

// Block-diagonal element Σ x_jk ⊗ |jk><jk| stored blockwise (index j*d + k).
struct BlockDiag {
  int d = 2;
  std::vector<CMatrix> blocks;
  const CMatrix& at(int j, int k) const { return blocks[static_cast<std::size_t>(j * d + k)]; }
};

BlockDiag s1_map(const CMatrix& rho);        // (1/d) Σ T^† ρ T ⊗ |jk><jk|
CMatrix t1_map(const BlockDiag& x);          // (1/d) Σ T x_jk T^†
CMatrix s2_map(const CVector& p, int d);     // d Σ p_jk |φ_{j,-k}><φ_{j,-k}|
CVector t2_map(const CMatrix& rho, int d);   // (1/d) tr(ρ φ_{j,-k})

// Channels as linear maps on matrices, and their Choi matrices Σ e_ab ⊗ Φ(e_ab).
using LinearMap = std::function<CMatrix(const CMatrix&)>;
CMatrix choi_matrix(const LinearMap& map, int in_dim);
CMatrix apply_choi(const CMatrix& choi, int in_dim, int out_dim, const CMatrix& x);
// tr_out of a Choi matrix; equals I for trace-preserving maps.
CMatrix choi_input_marginal(const CMatrix& choi, int in_dim, int out_dim);

// Teleportation split into its three stages.
LinearMap stage_attach_resource(int d);  // ρ ↦ ρ ⊗ φ            (d → d³)
LinearMap stage_bell_measure(int d);     // conditional states  (d³ → d²·d, block diagonal)
LinearMap stage_bob_correct(int d);      // Σ T x_jk T^†        (d²·d → d)
LinearMap teleport_map(int d);
LinearMap s1_linear(int d);  // d → d·d², output ordered matrix ⊗ register
LinearMap t1_linear(int d);
LinearMap s2_linear(int d);  // diagonal d² → d²
LinearMap t2_linear(int d);

// Direct (<φ_jk| ⊗ 1)(ρ ⊗ φ)(|φ_jk> ⊗ 1), the d x d block for outcome (j,k).
CMatrix bell_conditional(const DensityMatrix& rho, int j, int k);

}  // namespace telecode
