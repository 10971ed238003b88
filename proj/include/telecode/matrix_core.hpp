#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace telecode {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

// Amplitudes in big-endian tensor order: |j>|k> sits at index j*dim_B + k.
struct StateVector {
  CVector amplitudes;
  std::vector<std::size_t> factor_dims;  // empty if no tensor structure is known

  StateVector() = default;
  explicit StateVector(CVector amps, std::vector<std::size_t> dims = {});

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
  bool is_normalized(double tol = 1e-10) const;
};

// Factors listed in `left` form subsystem A, the remaining factors subsystem B.
struct Bipartition {
  std::vector<std::size_t> left;

  static Bipartition first(std::size_t count);
};

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // nonincreasing
  CMatrix left_vectors;              // columns
  CMatrix right_vectors;             // columns
  Bipartition cut;

  std::size_t rank(double rank_tol = 1e-8) const;
};

CMatrix tensor(const CMatrix& a, const CMatrix& b);
CMatrix tensor(std::initializer_list<CMatrix> factors);
CVector tensor(const CVector& a, const CVector& b);
StateVector tensor(const StateVector& a, const StateVector& b);

CMatrix identity(std::size_t n);
CMatrix matrix_unit(std::size_t n, std::size_t row, std::size_t col);
CVector basis_vector(std::size_t n, std::size_t index);
CMatrix outer(const CVector& a, const CVector& b);  // |a><b|
CMatrix projector(const CVector& v);                // |v><v|

void require_square(const CMatrix& m, const char* what);
void require_finite(const CMatrix& m, const char* what);

double unitarity_residual(const CMatrix& u);  // ||u u^dagger - I||_F
bool is_unitary(const CMatrix& u, double tol);
double hermiticity_residual(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol);
double min_eigenvalue_hermitian(const CMatrix& m);
bool is_psd(const CMatrix& m, double tol);

// Integer power; negative exponents use the adjoint (input must be unitary).
CMatrix unitary_power(const CMatrix& u, long exponent);

SchmidtDecomposition schmidt(const StateVector& v, const Bipartition& cut);
SchmidtDecomposition schmidt(const StateVector& v);  // first factor vs the rest

// Amplitude matrix dim_A x dim_B of v for the given cut.
CMatrix reshape_bipartite(const StateVector& v, const Bipartition& cut);

// Haar-distributed via QR of a seeded complex Ginibre matrix with the R-diagonal
// phases absorbed. Deterministic in (n, seed).
CMatrix random_unitary(std::size_t n, std::uint64_t seed);

// Uniformly random unit vector.
CVector random_unit_vector(std::size_t n, std::uint64_t seed);

// Independent child seed for stream `stream` of `seed` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// m acts on A ⊗ B; returns the same operator acting on B ⊗ A.
CMatrix swap_factors(const CMatrix& m, std::size_t dim_a, std::size_t dim_b);

}  // namespace telecode
