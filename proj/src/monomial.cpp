#include "telecode/monomial.hpp"

#include <algorithm>
#include <string>

#include "telecode/errors.hpp"

namespace telecode {

MonomialOp::MonomialOp(std::vector<std::uint32_t> target, std::vector<cplx> phase)
    : target_(std::move(target)), phase_(std::move(phase)) {
  if (target_.size() != phase_.size())
    throw DimensionError("MonomialOp: target and phase sizes differ");
  std::vector<bool> hit(target_.size(), false);
  for (auto t : target_) {
    if (t >= target_.size() || hit[t]) throw ValidationError("MonomialOp: target is not a permutation");
    hit[t] = true;
  }
}

MonomialOp MonomialOp::identity(std::size_t n) {
  std::vector<std::uint32_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<std::uint32_t>(i);
  return MonomialOp(std::move(t), std::vector<cplx>(n, 1.0));
}

MonomialOp MonomialOp::permutation(std::vector<std::uint32_t> target) {
  std::vector<cplx> ph(target.size(), 1.0);
  return MonomialOp(std::move(target), std::move(ph));
}

MonomialOp MonomialOp::diagonal(std::vector<cplx> phase) {
  std::vector<std::uint32_t> t(phase.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint32_t>(i);
  return MonomialOp(std::move(t), std::move(phase));
}

MonomialOp MonomialOp::from_dense(const CMatrix& m, double tol) {
  require_square(m, "MonomialOp::from_dense");
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::uint32_t> t(n);
  std::vector<cplx> ph(n);
  for (std::size_t c = 0; c < n; ++c) {
    int found = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (std::abs(m(r, c)) > tol) {
        ++found;
        t[c] = static_cast<std::uint32_t>(r);
        ph[c] = m(r, c);
      }
    }
    if (found != 1 || std::abs(std::abs(ph[c]) - 1.0) > tol)
      throw ValidationError("MonomialOp::from_dense: column " + std::to_string(c) +
                            " is not a unit-modulus monomial column");
  }
  return MonomialOp(std::move(t), std::move(ph));
}

MonomialOp MonomialOp::operator*(const MonomialOp& rhs) const {
  if (dim() != rhs.dim()) throw DimensionError("MonomialOp product: dimension mismatch");
  std::vector<std::uint32_t> t(dim());
  std::vector<cplx> ph(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto mid = rhs.target_[i];
    t[i] = target_[mid];
    ph[i] = phase_[mid] * rhs.phase_[i];
  }
  return MonomialOp(std::move(t), std::move(ph));
}

MonomialOp MonomialOp::adjoint() const {
  std::vector<std::uint32_t> t(dim());
  std::vector<cplx> ph(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    t[target_[i]] = static_cast<std::uint32_t>(i);
    ph[target_[i]] = std::conj(phase_[i]);
  }
  return MonomialOp(std::move(t), std::move(ph));
}

MonomialOp MonomialOp::pow(long exponent) const {
  MonomialOp base = exponent >= 0 ? *this : adjoint();
  unsigned long e = exponent >= 0 ? static_cast<unsigned long>(exponent)
                                  : static_cast<unsigned long>(-exponent);
  MonomialOp out = identity(dim());
  while (e) {
    if (e & 1UL) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

CMatrix MonomialOp::dense() const {
  CMatrix m = CMatrix::Zero(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m(target_[i], i) = phase_[i];
  return m;
}

bool MonomialOp::is_identity(double tol) const {
  return frobenius_distance(*this, identity(dim())) <= tol;
}

bool MonomialOp::is_self_adjoint(double tol) const {
  return frobenius_distance(*this, adjoint()) <= tol;
}

MonomialOp kron(const MonomialOp& a, const MonomialOp& b) {
  const std::size_t nb = b.dim();
  std::vector<std::uint32_t> t(a.dim() * nb);
  std::vector<cplx> ph(t.size());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      t[i * nb + j] = static_cast<std::uint32_t>(a.target(i) * nb + b.target(j));
      ph[i * nb + j] = a.phase(i) * b.phase(j);
    }
  return MonomialOp(std::move(t), std::move(ph));
}

MonomialOp direct_sum(const std::vector<MonomialOp>& blocks) {
  std::vector<std::uint32_t> t;
  std::vector<cplx> ph;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.dim(); ++i) {
      t.push_back(static_cast<std::uint32_t>(offset + b.target(i)));
      ph.push_back(b.phase(i));
    }
    offset += b.dim();
  }
  return MonomialOp(std::move(t), std::move(ph));
}

MonomialOp block_monomial(std::size_t count, std::size_t block_dim,
                          const std::vector<BlockEdge>& edges) {
  std::vector<std::uint32_t> t(count * block_dim);
  std::vector<cplx> ph(t.size());
  std::vector<bool> seen(count, false);
  for (const auto& e : edges) {
    if (e.from >= count || e.to >= count) throw DimensionError("block_monomial: summand out of range");
    if (e.op.dim() != block_dim) throw DimensionError("block_monomial: block dimension mismatch");
    if (seen[e.from]) throw ConsistencyError("block_monomial: summand mapped twice");
    seen[e.from] = true;
    for (std::size_t i = 0; i < block_dim; ++i) {
      t[e.from * block_dim + i] = static_cast<std::uint32_t>(e.to * block_dim + e.op.target(i));
      ph[e.from * block_dim + i] = e.op.phase(i);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw ConsistencyError("block_monomial: summand left unmapped");
  try {
    return MonomialOp(std::move(t), std::move(ph));
  } catch (const ValidationError&) {
    throw ConsistencyError("block_monomial: edges do not form a permutation of summands");
  }
}

double frobenius_distance(const MonomialOp& a, const MonomialOp& b) {
  if (a.dim() != b.dim()) throw DimensionError("frobenius_distance: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.target(i) == b.target(i))
      acc += std::norm(a.phase(i) - b.phase(i));
    else
      acc += std::norm(a.phase(i)) + std::norm(b.phase(i));
  }
  return std::sqrt(acc);
}

BiState::BiState(std::size_t dim_a, std::size_t dim_b, std::vector<Entry> entries)
    : dim_a_(dim_a), dim_b_(dim_b), entries_(std::move(entries)) {
  for (const auto& [k, v] : entries_)
    if (k >= static_cast<std::uint64_t>(dim_a_) * dim_b_)
      throw DimensionError("BiState: entry index out of range");
  normalize_storage();
}

void BiState::normalize_storage() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& x, const Entry& y) { return x.first < y.first; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const Entry& e) { return e.second == cplx(0.0); });
  entries_ = std::move(merged);
}

BiState BiState::from_dense(const StateVector& v) {
  if (v.factor_dims.size() != 2) throw UsageError("BiState::from_dense: need two factors");
  std::vector<Entry> e;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v.amplitudes(i) != cplx(0.0)) e.emplace_back(i, v.amplitudes(i));
  return BiState(v.factor_dims[0], v.factor_dims[1], std::move(e));
}

BiState BiState::apply(const MonomialOp& left, const MonomialOp& right) const {
  if (left.dim() != dim_a_ || right.dim() != dim_b_) throw DimensionError("BiState::apply: dimension mismatch");
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) {
    const auto a = static_cast<std::size_t>(k / dim_b_);
    const auto b = static_cast<std::size_t>(k % dim_b_);
    out.emplace_back(static_cast<std::uint64_t>(left.target(a)) * dim_b_ + right.target(b),
                     left.phase(a) * right.phase(b) * v);
  }
  return BiState(dim_a_, dim_b_, std::move(out));
}

BiState BiState::apply_left(const MonomialOp& left) const {
  return apply(left, MonomialOp::identity(dim_b_));
}

BiState BiState::apply_right(const MonomialOp& right) const {
  return apply(MonomialOp::identity(dim_a_), right);
}

cplx BiState::inner(const BiState& ket) const {
  if (dim_a_ != ket.dim_a_ || dim_b_ != ket.dim_b_) throw DimensionError("BiState::inner: dimension mismatch");
  cplx acc = 0.0;
  auto i = entries_.begin();
  auto j = ket.entries_.begin();
  while (i != entries_.end() && j != ket.entries_.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      acc += std::conj(i->second) * j->second;
      ++i;
      ++j;
    }
  }
  return acc;
}

double BiState::norm() const {
  double acc = 0.0;
  for (const auto& e : entries_) acc += std::norm(e.second);
  return std::sqrt(acc);
}

double BiState::distance(const BiState& other) const { return (*this - other).norm(); }

BiState BiState::operator+(const BiState& rhs) const {
  if (dim_a_ != rhs.dim_a_ || dim_b_ != rhs.dim_b_) throw DimensionError("BiState sum: dimension mismatch");
  std::vector<Entry> e = entries_;
  e.insert(e.end(), rhs.entries_.begin(), rhs.entries_.end());
  return BiState(dim_a_, dim_b_, std::move(e));
}

BiState BiState::operator-(const BiState& rhs) const { return *this + rhs * cplx(-1.0); }

BiState BiState::operator*(cplx s) const {
  std::vector<Entry> e = entries_;
  for (auto& x : e) x.second *= s;
  return BiState(dim_a_, dim_b_, std::move(e));
}

BiState BiState::embed(std::size_t block_a, std::size_t count_a, std::size_t block_b,
                       std::size_t count_b) const {
  if (block_a >= count_a || block_b >= count_b) throw DimensionError("BiState::embed: summand out of range");
  const std::size_t na = dim_a_ * count_a, nb = dim_b_ * count_b;
  std::vector<Entry> e;
  e.reserve(entries_.size());
  for (const auto& [k, v] : entries_) {
    const auto a = k / dim_b_ + block_a * dim_a_;
    const auto b = k % dim_b_ + block_b * dim_b_;
    e.emplace_back(a * nb + b, v);
  }
  return BiState(na, nb, std::move(e));
}

StateVector BiState::dense() const {
  CVector v = CVector::Zero(dim_a_ * dim_b_);
  for (const auto& [k, a] : entries_) v(static_cast<Eigen::Index>(k)) = a;
  return StateVector(std::move(v), {dim_a_, dim_b_});
}

}  // namespace telecode
