#include "telecode/matrix_core.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "telecode/errors.hpp"

namespace telecode {

StateVector::StateVector(CVector amps, std::vector<std::size_t> dims)
    : amplitudes(std::move(amps)), factor_dims(std::move(dims)) {
  if (!factor_dims.empty()) {
    std::size_t prod = 1;
    for (auto d : factor_dims) {
      if (d == 0) throw DimensionError("factor dimension 0");
      prod *= d;
    }
    if (prod != dim())
      throw DimensionError("factor_dims product " + std::to_string(prod) +
                           " does not match dim " + std::to_string(dim()));
  }
  if (!amplitudes.allFinite()) throw ValidationError("state has non-finite amplitudes");
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

Bipartition Bipartition::first(std::size_t count) {
  Bipartition b;
  b.left.resize(count);
  std::iota(b.left.begin(), b.left.end(), std::size_t{0});
  return b;
}

std::size_t SchmidtDecomposition::rank(double rank_tol) const {
  return static_cast<std::size_t>(
      std::count_if(coefficients.begin(), coefficients.end(),
                    [&](double c) { return c > rank_tol; }));
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

CMatrix tensor(std::initializer_list<CMatrix> factors) {
  CMatrix out = CMatrix::Ones(1, 1);
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

CVector tensor(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  auto da = a.factor_dims.empty() ? std::vector<std::size_t>{a.dim()} : a.factor_dims;
  auto db = b.factor_dims.empty() ? std::vector<std::size_t>{b.dim()} : b.factor_dims;
  da.insert(da.end(), db.begin(), db.end());
  return StateVector(tensor(a.amplitudes, b.amplitudes), std::move(da));
}

CMatrix identity(std::size_t n) { return CMatrix::Identity(n, n); }

CMatrix matrix_unit(std::size_t n, std::size_t row, std::size_t col) {
  if (row >= n || col >= n) throw DimensionError("matrix_unit index out of range");
  CMatrix m = CMatrix::Zero(n, n);
  m(row, col) = 1.0;
  return m;
}

CVector basis_vector(std::size_t n, std::size_t index) {
  if (index >= n) throw DimensionError("basis_vector index out of range");
  CVector v = CVector::Zero(n);
  v(index) = 1.0;
  return v;
}

CMatrix outer(const CVector& a, const CVector& b) { return a * b.adjoint(); }
CMatrix projector(const CVector& v) { return v * v.adjoint(); }

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(what) + ": expected square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) throw ValidationError(std::string(what) + ": non-finite entries");
}

double unitarity_residual(const CMatrix& u) {
  require_square(u, "unitarity_residual");
  return (u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols())).norm();
}

bool is_unitary(const CMatrix& u, double tol) { return unitarity_residual(u) <= tol; }

double hermiticity_residual(const CMatrix& m) {
  require_square(m, "hermiticity_residual");
  return (m - m.adjoint()).norm();
}

bool is_hermitian(const CMatrix& m, double tol) { return hermiticity_residual(m) <= tol; }

double min_eigenvalue_hermitian(const CMatrix& m) {
  require_square(m, "min_eigenvalue_hermitian");
  if (m.rows() == 0) return 0.0;
  CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_psd(const CMatrix& m, double tol) {
  return is_hermitian(m, tol) && min_eigenvalue_hermitian(m) >= -tol;
}

CMatrix unitary_power(const CMatrix& u, long exponent) {
  require_square(u, "unitary_power");
  CMatrix base = exponent >= 0 ? CMatrix(u) : CMatrix(u.adjoint());
  unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent)
                                  : static_cast<unsigned long>(-exponent);
  CMatrix out = CMatrix::Identity(u.rows(), u.cols());
  while (e) {
    if (e & 1UL) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

CMatrix reshape_bipartite(const StateVector& v, const Bipartition& cut) {
  const auto& dims = v.factor_dims;
  if (dims.empty()) throw UsageError("schmidt: state has no factor_dims");
  std::vector<bool> on_left(dims.size(), false);
  for (auto f : cut.left) {
    if (f >= dims.size()) throw UsageError("schmidt: cut references missing factor");
    if (on_left[f]) throw UsageError("schmidt: cut lists a factor twice");
    on_left[f] = true;
  }
  std::size_t da = 1, db = 1;
  for (std::size_t f = 0; f < dims.size(); ++f) (on_left[f] ? da : db) *= dims[f];

  CMatrix m(da, db);
  std::vector<std::size_t> digit(dims.size(), 0);
  for (std::size_t idx = 0; idx < v.dim(); ++idx) {
    std::size_t rest = idx;
    for (std::size_t f = dims.size(); f-- > 0;) {
      digit[f] = rest % dims[f];
      rest /= dims[f];
    }
    std::size_t a = 0, b = 0;
    for (auto f : cut.left) a = a * dims[f] + digit[f];
    for (std::size_t f = 0; f < dims.size(); ++f)
      if (!on_left[f]) b = b * dims[f] + digit[f];
    m(a, b) = v.amplitudes(idx);
  }
  return m;
}

SchmidtDecomposition schmidt(const StateVector& v, const Bipartition& cut) {
  CMatrix m = reshape_bipartite(v, cut);
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  const auto& s = svd.singularValues();
  out.coefficients.assign(s.data(), s.data() + s.size());
  out.left_vectors = svd.matrixU();
  out.right_vectors = svd.matrixV().conjugate();
  out.cut = cut;
  return out;
}

SchmidtDecomposition schmidt(const StateVector& v) {
  if (v.factor_dims.size() < 2) throw UsageError("schmidt: need at least two factors");
  return schmidt(v, Bipartition::first(1));
}

namespace {

CMatrix ginibre(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      double re = normal(rng);
      double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  return g;
}

}  // namespace

CMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw UsageError("random_unitary: n must be at least 1");
  CMatrix g = ginibre(n, n, seed);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < n; ++j) {
    cplx d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= (a > 0 ? d / a : cplx(1.0));
  }
  return q;
}

CVector random_unit_vector(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw UsageError("random_unit_vector: n must be at least 1");
  CVector v = ginibre(n, 1, seed).col(0);
  return v / v.norm();
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CMatrix swap_factors(const CMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  const auto n = static_cast<Eigen::Index>(dim_a * dim_b);
  if (m.rows() != n || m.cols() != n) throw DimensionError("swap_factors: size mismatch");
  Eigen::VectorXi perm(n);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t b = 0; b < dim_b; ++b)
      perm(static_cast<Eigen::Index>(a * dim_b + b)) = static_cast<int>(b * dim_a + a);
  Eigen::PermutationMatrix<Eigen::Dynamic> p(perm);
  return p * m * p.transpose();
}

}  // namespace telecode
