#include "telecode/protocols.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "telecode/errors.hpp"
#include "telecode/weyl_pauli.hpp"

namespace telecode {

namespace {

void require_dim(const CMatrix& m, Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionError(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix m, double tol) : m_(std::move(m)) {
  require_square(m_, "DensityMatrix");
  require_finite(m_, "DensityMatrix");
  if (m_.rows() < 1) throw DimensionError("DensityMatrix: empty");
  if (!is_hermitian(m_, tol)) throw ValidationError("DensityMatrix: not Hermitian");
  if (std::abs(m_.trace() - cplx(1.0)) > tol) throw ValidationError("DensityMatrix: trace is not 1");
  if (min_eigenvalue_hermitian(m_) < -tol) throw ValidationError("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  if (d < 1) throw UsageError("maximally_mixed: d must be positive");
  return DensityMatrix(identity(static_cast<std::size_t>(d)) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::random(int d, std::uint64_t seed) {
  if (d < 1) throw UsageError("DensityMatrix::random: d must be positive");
  const auto n = static_cast<std::size_t>(d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  CVector spec(d);
  for (int i = 0; i < d; ++i) spec(i) = u(rng);
  const CMatrix v = random_unitary(n, seed + 7919);
  CMatrix rho = v * spec.asDiagonal() * v.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(rho);
}

ClassicalDist::ClassicalDist(int d, std::vector<double> probs, double tol) : d_(d), p_(std::move(probs)) {
  if (d < 2) throw UsageError("ClassicalDist: d must be at least 2");
  if (p_.size() != static_cast<std::size_t>(d * d))
    throw DimensionError("ClassicalDist: expected d² probabilities");
  for (double x : p_)
    if (!(x >= 0.0) || !std::isfinite(x)) throw ValidationError("ClassicalDist: negative or non-finite probability");
  const double s = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (std::abs(s - 1.0) > tol) throw ValidationError("ClassicalDist: probabilities do not sum to 1");
}

ClassicalDist ClassicalDist::point_mass(int d, int j, int k) {
  std::vector<double> p(static_cast<std::size_t>(d * d), 0.0);
  p[static_cast<std::size_t>(mod(j, d) * d + mod(k, d))] = 1.0;
  return ClassicalDist(d, std::move(p));
}

ClassicalDist ClassicalDist::uniform(int d) {
  return ClassicalDist(d, std::vector<double>(static_cast<std::size_t>(d * d), 1.0 / (d * d)));
}

ClassicalDist ClassicalDist::random(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(static_cast<std::size_t>(d * d));
  for (auto& x : p) x = e(rng);
  const double s = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= s;
  return ClassicalDist(d, std::move(p));
}

MeasurementRecord alice_measurement(const DensityMatrix& rho) {
  const int d = rho.dim();
  if (d < 2) throw UsageError("alice_measurement: d must be at least 2");
  MeasurementRecord rec;
  rec.d = d;
  rec.weight = 1.0 / (d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const CMatrix t = t_op(d, j, k);
      rec.blocks.push_back(t.adjoint() * rho.matrix() * t);
    }
  return rec;
}

DensityMatrix teleport(const DensityMatrix& rho) {
  const auto rec = alice_measurement(rho);
  const int d = rec.d;
  CMatrix out = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const CMatrix t = t_op(d, j, k);
      out += rec.weight * t * rec.at(j, k) * t.adjoint();
    }
  return DensityMatrix(out);
}

CMatrix bell_conditional(const DensityMatrix& rho, int j, int k) {
  const int d = rho.dim();
  const CMatrix joint = tensor(rho.matrix(), projector(phi_vec(d, 0, 0).amplitudes));
  const CVector phi = phi_vec(d, j, k).amplitudes;
  // (<φ_jk| ⊗ 1) acting on the first two factors of C^d ⊗ C^d ⊗ C^d
  CMatrix bra = CMatrix::Zero(d, d * d * d);
  for (int ab = 0; ab < d * d; ++ab)
    for (int c = 0; c < d; ++c) bra(c, ab * d + c) = std::conj(phi(ab));
  return bra * joint * bra.adjoint();
}

CMatrix superdense_encode(const ClassicalDist& p) {
  const int d = p.d();
  CMatrix out = CMatrix::Zero(d * d, d * d);
  const CVector phi = phi_vec(d, 0, 0).amplitudes;
  const CMatrix id = identity(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      if (p.at(j, k) == 0.0) continue;
      // Alice encodes (j,k) by applying T_{jk} to her half of φ
      const CVector v = tensor(t_op(d, j, k), id) * phi;
      out += p.at(j, k) * projector(v);
    }
  return out;
}

ClassicalDist superdense_decode(const CMatrix& state, int d) {
  require_dim(state, d * d, d * d, "superdense_decode");
  std::vector<double> p(static_cast<std::size_t>(d * d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const CVector v = phi_vec(d, j, k).amplitudes;
      p[static_cast<std::size_t>(j * d + k)] = std::max(0.0, (v.adjoint() * state * v)(0, 0).real());
    }
  return ClassicalDist(d, std::move(p), 1e-10);
}

ClassicalDist superdense(const ClassicalDist& p) { return superdense_decode(superdense_encode(p), p.d()); }

BlockDiag s1_map(const CMatrix& rho) {
  require_square(rho, "s1_map");
  const int d = static_cast<int>(rho.rows());
  if (d < 2) throw DimensionError("s1_map: d must be at least 2");
  BlockDiag out;
  out.d = d;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const CMatrix t = t_op(d, j, k);
      out.blocks.push_back(t.adjoint() * rho * t / static_cast<double>(d));
    }
  return out;
}

CMatrix t1_map(const BlockDiag& x) {
  const int d = x.d;
  if (x.blocks.size() != static_cast<std::size_t>(d * d)) throw DimensionError("t1_map: expected d² blocks");
  CMatrix out = CMatrix::Zero(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      require_dim(x.at(j, k), d, d, "t1_map block");
      const CMatrix t = t_op(d, j, k);
      out += t * x.at(j, k) * t.adjoint();
    }
  return out / static_cast<double>(d);
}

CMatrix s2_map(const CVector& p, int d) {
  if (d < 2) throw UsageError("s2_map: d must be at least 2");
  if (p.size() != d * d) throw DimensionError("s2_map: expected d² entries");
  CMatrix out = CMatrix::Zero(d * d, d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      out += static_cast<double>(d) * p(j * d + k) * projector(phi_vec(d, j, -k).amplitudes);
  return out;
}

CVector t2_map(const CMatrix& rho, int d) {
  require_dim(rho, d * d, d * d, "t2_map");
  CVector out(d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const CVector v = phi_vec(d, j, -k).amplitudes;
      out(j * d + k) = (v.adjoint() * rho * v)(0, 0) / static_cast<double>(d);
    }
  return out;
}

CMatrix choi_matrix(const LinearMap& map, int in_dim) {
  CMatrix choi;
  for (int a = 0; a < in_dim; ++a)
    for (int b = 0; b < in_dim; ++b) {
      const CMatrix img = map(matrix_unit(static_cast<std::size_t>(in_dim), static_cast<std::size_t>(a),
                                          static_cast<std::size_t>(b)));
      if (choi.size() == 0) choi = CMatrix::Zero(in_dim * img.rows(), in_dim * img.cols());
      choi.block(a * img.rows(), b * img.cols(), img.rows(), img.cols()) = img;
    }
  return choi;
}

CMatrix apply_choi(const CMatrix& choi, int in_dim, int out_dim, const CMatrix& x) {
  require_dim(choi, in_dim * out_dim, in_dim * out_dim, "apply_choi");
  require_dim(x, in_dim, in_dim, "apply_choi input");
  CMatrix out = CMatrix::Zero(out_dim, out_dim);
  for (int a = 0; a < in_dim; ++a)
    for (int b = 0; b < in_dim; ++b) out += x(a, b) * choi.block(a * out_dim, b * out_dim, out_dim, out_dim);
  return out;
}

CMatrix choi_input_marginal(const CMatrix& choi, int in_dim, int out_dim) {
  require_dim(choi, in_dim * out_dim, in_dim * out_dim, "choi_input_marginal");
  CMatrix out(in_dim, in_dim);
  for (int a = 0; a < in_dim; ++a)
    for (int b = 0; b < in_dim; ++b) out(a, b) = choi.block(a * out_dim, b * out_dim, out_dim, out_dim).trace();
  return out;
}

LinearMap stage_attach_resource(int d) {
  const CMatrix phi = projector(phi_vec(d, 0, 0).amplitudes);
  return [phi](const CMatrix& x) { return tensor(x, phi); };
}

LinearMap stage_bell_measure(int d) {
  std::vector<CMatrix> bras;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const CVector phi = phi_vec(d, j, k).amplitudes;
      CMatrix bra = CMatrix::Zero(d, d * d * d);
      for (int ab = 0; ab < d * d; ++ab)
        for (int c = 0; c < d; ++c) bra(c, ab * d + c) = std::conj(phi(ab));
      bras.push_back(std::move(bra));
    }
  return [d, bras](const CMatrix& x) {
    require_dim(x, d * d * d, d * d * d, "bell measurement stage");
    CMatrix out = CMatrix::Zero(d * d * d, d * d * d);
    for (int r = 0; r < d * d; ++r)
      out.block(r * d, r * d, d, d) = bras[static_cast<std::size_t>(r)] * x * bras[static_cast<std::size_t>(r)].adjoint();
    return out;
  };
}

LinearMap stage_bob_correct(int d) {
  return [d](const CMatrix& x) {
    require_dim(x, d * d * d, d * d * d, "correction stage");
    CMatrix out = CMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const int r = j * d + k;
        const CMatrix t = t_op(d, j, k);
        out += t * x.block(r * d, r * d, d, d) * t.adjoint();
      }
    return out;
  };
}

LinearMap teleport_map(int d) {
  auto a = stage_attach_resource(d);
  auto b = stage_bell_measure(d);
  auto c = stage_bob_correct(d);
  return [a, b, c](const CMatrix& x) { return c(b(a(x))); };
}

LinearMap s1_linear(int d) {
  return [d](const CMatrix& x) {
    const auto blocks = s1_map(x);
    CMatrix out = CMatrix::Zero(d * d * d, d * d * d);
    for (int r = 0; r < d * d; ++r)
      out += tensor(blocks.blocks[static_cast<std::size_t>(r)],
                    matrix_unit(static_cast<std::size_t>(d * d), static_cast<std::size_t>(r),
                                static_cast<std::size_t>(r)));
    return out;
  };
}

LinearMap t1_linear(int d) {
  return [d](const CMatrix& x) {
    require_dim(x, d * d * d, d * d * d, "t1_linear");
    BlockDiag b;
    b.d = d;
    const int reg = d * d;
    for (int r = 0; r < reg; ++r) {
      CMatrix blk(d, d);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) blk(p, q) = x(p * reg + r, q * reg + r);
      b.blocks.push_back(std::move(blk));
    }
    return t1_map(b);
  };
}

LinearMap s2_linear(int d) {
  return [d](const CMatrix& x) {
    require_dim(x, d * d, d * d, "s2_linear");
    return s2_map(x.diagonal(), d);
  };
}

LinearMap t2_linear(int d) {
  return [d](const CMatrix& x) {
    const CVector p = t2_map(x, d);
    return CMatrix(p.asDiagonal());
  };
}

}  // namespace telecode
