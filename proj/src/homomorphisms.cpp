#include "telecode/homomorphisms.hpp"

#include <string>

#include "telecode/errors.hpp"
#include "telecode/weyl_pauli.hpp"

namespace telecode {

namespace {

std::size_t idx(int d, int j, int k) { return static_cast<std::size_t>(mod(j, d) * d + mod(k, d)); }

std::string pair_name(const char* base, int j, int k) {
  return std::string(base) + "[" + std::to_string(j) + "," + std::to_string(k) + "]";
}

}  // namespace

FreeRep::FreeRep(std::vector<CMatrix> gens, int d_ctx, double tol) : gens_(std::move(gens)), d_(d_ctx) {
  if (gens_.empty()) throw UsageError("FreeRep: no generators");
  if (d_ != 0 && gens_.size() != static_cast<std::size_t>(d_ * d_))
    throw UsageError("FreeRep: expected d² generators for d = " + std::to_string(d_));
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    require_square(gens_[i], "FreeRep generator");
    if (gens_[i].rows() != gens_[0].rows()) throw DimensionError("FreeRep: generators differ in size");
    if (!is_unitary(gens_[i], tol))
      throw ValidationError("FreeRep: generator " + std::to_string(i) + " is not unitary");
  }
}

const CMatrix& FreeRep::gen(int l, int m) const {
  if (d_ == 0) throw UsageError("FreeRep: generators are not indexed by (l,m)");
  return gens_[idx(d_, l, m)];
}

BrownRep::BrownRep(int d, std::vector<CMatrix> blocks, double tol) : d_(d), blocks_(std::move(blocks)) {
  if (d < 2) throw UsageError("BrownRep: d must be at least 2");
  if (blocks_.size() != static_cast<std::size_t>(d * d)) throw UsageError("BrownRep: expected d² blocks");
  n_ = static_cast<std::size_t>(blocks_[0].rows());
  for (const auto& b : blocks_)
    if (b.rows() != static_cast<Eigen::Index>(n_) || b.cols() != static_cast<Eigen::Index>(n_))
      throw DimensionError("BrownRep: blocks differ in size");
  const double r = unitarity_residual(fundamental());
  if (r > tol)
    throw ValidationError("BrownRep: fundamental matrix is not unitary (residual " + std::to_string(r) + ")");
}

BrownRep BrownRep::from_fundamental(int d, const CMatrix& u, double tol) {
  require_square(u, "BrownRep::from_fundamental");
  if (d < 2 || u.rows() % d != 0) throw DimensionError("BrownRep::from_fundamental: size not divisible by d");
  const auto n = u.rows() / d;
  std::vector<CMatrix> blocks;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) blocks.push_back(u.block(j * n, k * n, n, n));
  return BrownRep(d, std::move(blocks), tol);
}

const CMatrix& BrownRep::block(int j, int k) const { return blocks_[idx(d_, j, k)]; }

CMatrix BrownRep::fundamental() const { return assemble_fundamental(d_, blocks_); }

CMatrix assemble_fundamental(int d, const std::vector<CMatrix>& blocks) {
  if (blocks.size() != static_cast<std::size_t>(d * d)) throw UsageError("assemble_fundamental: expected d² blocks");
  const auto n = blocks[0].rows();
  CMatrix u(d * n, d * n);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) u.block(j * n, k * n, n, n) = blocks[idx(d, j, k)];
  return u;
}

FreeRep random_free_rep(int d, std::size_t n, std::uint64_t seed) {
  if (d < 2) throw UsageError("random_free_rep: d must be at least 2");
  std::vector<CMatrix> gens;
  for (int i = 0; i < d * d; ++i)
    gens.push_back(random_unitary(n, derive_seed(seed, static_cast<std::uint64_t>(i))));
  return FreeRep(std::move(gens), d);
}

BrownRep random_brown_rep(int d, std::size_t n, std::uint64_t seed) {
  if (d < 2) throw UsageError("random_brown_rep: d must be at least 2");
  return BrownRep::from_fundamental(d, random_unitary(static_cast<std::size_t>(d) * n, derive_seed(seed, 0)));
}

std::vector<CMatrix> sigma1_images(const FreeRep& free) {
  const int d = free.d();
  if (d < 2) throw UsageError("sigma1: FreeRep needs d² generators indexed by (l,m)");
  const auto n = static_cast<Eigen::Index>(free.dim());
  std::vector<CMatrix> out;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      CMatrix img = CMatrix::Zero(d * n, d * n);
      for (int l = 0; l < d; ++l)
        for (int m = 0; m < d; ++m) {
          const cplx ph = root_of_unity(d, -static_cast<long>(j - k) * l) / static_cast<double>(d);
          img.block(mod(j - m, d) * n, mod(k - m, d) * n, n, n) += ph * free.gen(l, m);
        }
      out.push_back(std::move(img));
    }
  return out;
}

BrownRep sigma1(const FreeRep& free) { return BrownRep(free.d(), sigma1_images(free)); }

CMatrix sigma1_projector_form(const FreeRep& free) {
  const int d = free.d();
  if (d < 2) throw UsageError("sigma1_projector_form: FreeRep needs d² generators");
  CMatrix out = CMatrix::Zero(d * d * free.dim(), d * d * free.dim());
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) out += tensor(projector(phi_vec(d, -l, m).amplitudes), free.gen(l, m));
  return out;
}

std::vector<CMatrix> sigma2_images(const BrownRep& b) {
  const int d = b.d();
  const auto n = static_cast<Eigen::Index>(b.n());
  std::vector<CMatrix> out;
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) {
      CMatrix img = CMatrix::Zero(d * n, d * n);
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          img.block(mod(j - m, d) * n, mod(k - m, d) * n, n, n) +=
              root_of_unity(d, static_cast<long>(j - k) * l) * b.block(j, k);
      out.push_back(std::move(img));
    }
  return out;
}

std::vector<CMatrix> sigma2_conjugation_images(const BrownRep& b) {
  const int d = b.d();
  const CMatrix u = b.fundamental();
  const CMatrix id = identity(b.n());
  std::vector<CMatrix> out;
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) {
      const CMatrix t = tensor(t_op(d, l, -m), id);
      out.push_back(t * u * t.adjoint());
    }
  return out;
}

FreeRep sigma2(const BrownRep& b) { return FreeRep(sigma2_images(b), b.d()); }

BrownRep alpha_power(const BrownRep& b, long l, long n) {
  const int d = b.d();
  std::vector<CMatrix> blocks;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      blocks.push_back(root_of_unity(d, l * (j - k)) * b.block(mod(j + n, d), mod(k + n, d)));
  return BrownRep(d, std::move(blocks));
}

BrownRep alpha1(const BrownRep& b) { return alpha_power(b, 1, 0); }
BrownRep alpha2(const BrownRep& b) { return alpha_power(b, 0, 1); }

FreeRep beta_power(const FreeRep& f, long a, long b) {
  const int d = f.d();
  if (d < 2) throw UsageError("beta_power: FreeRep needs d² generators");
  std::vector<CMatrix> gens;
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) gens.push_back(f.gen(mod(l + a, d), mod(m - b, d)));
  return FreeRep(std::move(gens), d);
}

FreeRep beta1(const FreeRep& f) { return beta_power(f, 1, 0); }
FreeRep beta2(const FreeRep& f) { return beta_power(f, 0, 1); }

CMatrix v_unitary(int d) {
  CMatrix v(d * d, d * d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      v.col(j * d + k) = root_of_unity(d, -static_cast<long>(j) * k) * phi_vec(d, j, k).amplitudes;
  return v;
}

CheckList check_ue(int d, double tol) {
  CheckList out;
  const CMatrix v = v_unitary(d);
  const CMatrix x = pauli_x(d), z = pauli_z(d), id = identity(static_cast<std::size_t>(d));
  out.add("V unitary", "ue.unitary", unitarity_residual(v), tol);
  out.add("V*(X⊗1)V = Z⊗X", "ue.x", (v.adjoint() * tensor(x, id) * v - tensor(z, x)).norm(), tol);
  out.add("V*(Z⊗1)V = 1⊗Z", "ue.z", (v.adjoint() * tensor(z, id) * v - tensor(id, z)).norm(), tol);
  return out;
}

CovariantEmbedding covariant_embedding(const BrownRep& b) {
  const int d = b.d();
  const auto n = static_cast<Eigen::Index>(b.n());
  CovariantEmbedding e;
  e.d = d;
  e.n = b.n();
  std::vector<BrownRep> twisted;
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) twisted.push_back(alpha_power(b, -l, -m));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      CMatrix img = CMatrix::Zero(d * d * n, d * d * n);
      for (int lm = 0; lm < d * d; ++lm) img.block(lm * n, lm * n, n, n) = twisted[static_cast<std::size_t>(lm)].block(j, k);
      e.images.push_back(std::move(img));
    }
  const CMatrix idn = identity(b.n()), idd = identity(static_cast<std::size_t>(d));
  e.unit = identity(static_cast<std::size_t>(d * d) * b.n());
  e.v = tensor({pauli_z(d), pauli_x(d), idn});
  e.w = tensor({idd, pauli_z(d), idn});
  return e;
}

CheckList check_covariance(const BrownRep& b, double tol) {
  const int d = b.d();
  const auto e = covariant_embedding(b);
  const auto e1 = covariant_embedding(alpha1(b));
  const auto e2 = covariant_embedding(alpha2(b));
  CheckList out;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const auto i = idx(d, j, k);
      out.add(pair_name("v pi(u) v* = pi(alpha1 u)", j, k), "rule.v",
              (e.v * e.images[i] * e.v.adjoint() - e1.images[i]).norm(), tol);
      out.add(pair_name("w pi(u) w* = pi(alpha2 u)", j, k), "rule.w",
              (e.w * e.images[i] * e.w.adjoint() - e2.images[i]).norm(), tol);
    }
  out.add("v w = omega w v", "rule.vw", (e.v * e.w - root_of_unity(d, 1) * e.w * e.v).norm(), tol);
  out.add("v^d = 1", "rule.vd", (unitary_power(e.v, d) - e.unit).norm(), tol);
  out.add("w^d = 1", "rule.wd", (unitary_power(e.w, d) - e.unit).norm(), tol);
  out.add("v pi(1) v* = pi(1)", "rule.unit", (e.v * e.unit * e.v.adjoint() - e.unit).norm(), tol);
  return out;
}

CheckList compose_identity_check(const BrownRep& b, double tol, std::optional<BlockFault> fault) {
  const int d = b.d();
  const auto s2 = sigma2(b);
  const auto lhs = sigma1_images(s2);
  const auto emb = covariant_embedding(b);
  const CMatrix vv = tensor(v_unitary(d), identity(b.n()));
  std::vector<CMatrix> proj;
  for (int l = 0; l < d; ++l)
    for (int n = 0; n < d; ++n) proj.push_back(projector(phi_vec(d, -l, -n).amplitudes));
  std::vector<BrownRep> twisted;
  for (int l = 0; l < d; ++l)
    for (int n = 0; n < d; ++n) twisted.push_back(alpha_power(b, l, n));

  CheckList out;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const auto i = idx(d, j, k);
      CMatrix img = lhs[i];
      if (fault && mod(fault->j, d) == j && mod(fault->k, d) == k) img(0, 0) += fault->delta;
      CMatrix rhs = CMatrix::Zero(img.rows(), img.cols());
      for (std::size_t ln = 0; ln < proj.size(); ++ln) rhs += tensor(proj[ln], twisted[ln].block(j, k));
      out.add(pair_name("(id⊗sigma2)sigma1(u)", j, k), "compose.sigma2_sigma1", (img - rhs).norm(), tol);
      out.add(pair_name("(V*⊗1)(id⊗sigma2)sigma1(u)(V⊗1) = pi(u)", j, k), "compose.v_conjugate",
              (vv.adjoint() * img * vv - emb.images[i]).norm(), tol);
    }
  return out;
}

CheckList compose_identity_check_free(const FreeRep& f, double tol, std::optional<BlockFault> fault) {
  const int d = f.d();
  if (d < 2) throw UsageError("compose_identity_check_free: FreeRep needs d² generators");
  const BrownRep s1(d, sigma1_images(f));
  const auto lhs = sigma2_images(s1);
  std::vector<CMatrix> proj;
  std::vector<FreeRep> shifted;
  for (int a = 0; a < d; ++a)
    for (int bb = 0; bb < d; ++bb) {
      proj.push_back(projector(phi_vec(d, a, bb).amplitudes));
      shifted.push_back(beta_power(f, -a, -bb));
    }
  CheckList out;
  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) {
      CMatrix img = lhs[idx(d, l, m)];
      if (fault && mod(fault->j, d) == l && mod(fault->k, d) == m) img(0, 0) += fault->delta;
      CMatrix rhs = CMatrix::Zero(img.rows(), img.cols());
      for (std::size_t ab = 0; ab < proj.size(); ++ab) rhs += tensor(proj[ab], shifted[ab].gen(l, m));
      out.add(pair_name("(id⊗sigma1)sigma2(g)", l, m), "compose.sigma1_sigma2", (img - rhs).norm(), tol);
    }
  return out;
}

}  // namespace telecode
