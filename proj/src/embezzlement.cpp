#include "telecode/embezzlement.hpp"

#include <cmath>

#include "telecode/errors.hpp"

namespace telecode {

namespace {

std::uint32_t u32(std::size_t x) { return static_cast<std::uint32_t>(x); }

// Target rank r (1-based) of (|0ξ0> + |1ξ1>)/√2 ↦ (qubit b, level j).
std::pair<std::size_t, std::size_t> rank_slot(std::size_t r) { return {(r - 1) % 2, (r + 1) / 2}; }

}  // namespace

std::vector<double> xi_coefficients(std::size_t n) {
  if (n < 1) throw UsageError("xi_coefficients: need at least one level");
  std::vector<double> c(n);
  double h = 0.0;
  for (std::size_t j = n; j >= 1; --j) h += 1.0 / static_cast<double>(j);
  for (std::size_t j = 1; j <= n; ++j) c[j - 1] = 1.0 / std::sqrt(static_cast<double>(j) * h);
  return c;
}

StateVector xi_state(std::size_t n) {
  const auto c = xi_coefficients(n);
  CVector v = CVector::Zero(static_cast<Eigen::Index>(n * n));
  for (std::size_t j = 0; j < n; ++j) v(static_cast<Eigen::Index>(j * n + j)) = c[j];
  return StateVector(std::move(v), {n, n});
}

EmbezzlementFamily embezzle_unitaries(std::size_t n) {
  if (n < 2) throw UsageError("embezzle_unitaries: need at least two levels");
  EmbezzlementFamily f;
  f.levels = n;
  f.xi = xi_coefficients(n);
  const std::size_t dim = 2 * n;
  auto alice_index = [n](std::size_t b, std::size_t j) { return b * n + (j - 1); };
  auto bob_index = [](std::size_t j, std::size_t b) { return (j - 1) * 2 + b; };

  std::vector<std::uint32_t> ua(dim), vb(dim);
  for (std::size_t r = 1; r <= n; ++r) {
    auto [b0, j0] = rank_slot(r);
    ua[alice_index(0, r)] = u32(alice_index(b0, j0));
    auto [b1, j1] = rank_slot(n + r);
    ua[alice_index(1, r)] = u32(alice_index(b1, j1));
    vb[bob_index(r, 0)] = u32(bob_index(j0, b0));
    auto [b2, j2] = rank_slot(2 * n + 1 - r);
    vb[bob_index(r, 1)] = u32(bob_index(j2, b2));
  }
  f.alice = MonomialOp::permutation(std::move(ua));
  f.bob = MonomialOp::permutation(std::move(vb));

  std::vector<BiState::Entry> e0, e1;
  for (std::size_t j = 1; j <= n; ++j) {
    e0.emplace_back(static_cast<std::uint64_t>(alice_index(0, j)) * dim + bob_index(j, 0), f.xi[j - 1]);
    e1.emplace_back(static_cast<std::uint64_t>(alice_index(1, j)) * dim + bob_index(j, 1), f.xi[j - 1]);
  }
  f.h0 = BiState(dim, dim, std::move(e0));
  f.h1 = BiState(dim, dim, std::move(e1));
  const BiState target = (f.h0 + f.h1) * cplx(1.0 / std::sqrt(2.0));
  f.err = f.h0.apply(f.alice, f.bob).distance(target);
  return f;
}

double embezzlement_error_closed_form(std::size_t n) {
  const auto c = xi_coefficients(n);
  const double s = 1.0 / std::sqrt(2.0);
  double acc = 0.0;
  for (std::size_t r = 1; r <= 2 * n; ++r) {
    const double want = c[(r + 1) / 2 - 1] * s;
    const double have = r <= n ? c[r - 1] : 0.0;
    acc += (have - want) * (have - want);
  }
  return std::sqrt(acc);
}

MonomialOp alice_x(std::size_t n) {
  std::vector<cplx> ph(2 * n, 1.0);
  for (std::size_t j = 0; j < n; ++j) ph[n + j] = -1.0;
  return MonomialOp::diagonal(std::move(ph));
}

MonomialOp alice_z(std::size_t n) {
  std::vector<std::uint32_t> t(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    t[j] = u32(n + j);
    t[n + j] = u32(j);
  }
  return MonomialOp::permutation(std::move(t));
}

MonomialOp bob_x(std::size_t n) {
  std::vector<cplx> ph(2 * n, 1.0);
  for (std::size_t j = 0; j < n; ++j) ph[2 * j + 1] = -1.0;
  return MonomialOp::diagonal(std::move(ph));
}

MonomialOp bob_z(std::size_t n) {
  std::vector<std::uint32_t> t(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) t[i] = u32(i ^ 1U);
  return MonomialOp::permutation(std::move(t));
}

namespace {

MonomialOp word_operator(const SpecPtr& group, const std::vector<MonomialOp>& images, const Word& w) {
  if (!(*w.spec() == *group)) throw UsageError("word is not over the representation's group");
  if (images.empty()) throw UsageError("representation has no generators");
  MonomialOp out = MonomialOp::identity(images[0].dim());
  for (const auto& l : w.letters()) out = out * images.at(l.factor).pow(l.exponent);
  return out;
}

}  // namespace

MonomialOp RepPair::left_word(const Word& w) const { return word_operator(group, left, w); }
MonomialOp RepPair::right_word(const Word& w) const { return word_operator(group, right, w); }

CMatrix RepPair::gram() const {
  const auto k = static_cast<Eigen::Index>(window.size());
  CMatrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j)
      g(i, j) = window[static_cast<std::size_t>(i)].inner(window[static_cast<std::size_t>(j)]);
  return g;
}

RepPair rep_pair_f4(const EmbezzlementFamily& f, SignConvention convention) {
  const auto n = f.levels;
  const cplx s = convention == SignConvention::value_consistent ? cplx(-1.0) : cplx(1.0);
  RepPair r;
  r.name = "f4";
  r.group = make_spec({"g00", "g10", "g01", "g11"}, {kInfiniteOrder, kInfiniteOrder, kInfiniteOrder, kInfiniteOrder});
  const MonomialOp sa = MonomialOp::diagonal(std::vector<cplx>(2 * n, s));
  const auto xa = alice_x(n), za = alice_z(n), xb = bob_x(n), zb = bob_z(n);
  r.left = {f.alice, xa * f.alice, sa * xa * f.alice * za, f.alice * za};
  r.right = {f.bob, xb * f.bob, sa * xb * f.bob * zb, f.bob * zb};
  r.window = {f.h0, f.h1};
  r.window_names = {"h0", "h1"};
  r.levels = n;
  r.err = f.err;
  return r;
}

RepPair rep_pair_f4(std::size_t n, SignConvention convention) { return rep_pair_f4(embezzle_unitaries(n), convention); }

RepPair rep_pair_f3(const EmbezzlementFamily& f) {
  const auto n = f.levels;
  RepPair r;
  r.name = "f3";
  r.group = make_spec({"g0", "g1", "g2"}, {kInfiniteOrder, kInfiniteOrder, kInfiniteOrder});
  r.left = {alice_z(n), f.alice, alice_x(n) * f.alice};
  r.right = {bob_z(n), f.bob, bob_x(n) * f.bob};
  r.window = {f.h0, f.h1};
  r.window_names = {"h0", "h1"};
  r.levels = n;
  r.err = f.err;
  return r;
}

RepPair rep_pair_f3(std::size_t n) { return rep_pair_f3(embezzle_unitaries(n)); }

RepPair rep_pair_zzf(const EmbezzlementFamily& f) {
  const auto n = f.levels;
  RepPair r;
  r.name = "zzf";
  r.group = spec_z2_z2_z();
  r.left = {alice_z(n), alice_x(n), f.alice};
  r.right = {bob_z(n), bob_x(n), f.bob};
  r.window = {f.h0, f.h1};
  r.window_names = {"h0", "h1"};
  r.levels = n;
  r.err = f.err;
  return r;
}

CMatrix correlation_block(const RepPair& rep, const MonomialOp& left, const MonomialOp& right) {
  const auto k = static_cast<Eigen::Index>(rep.window.size());
  CMatrix out(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const BiState img = rep.window[static_cast<std::size_t>(j)].apply(left, right);
    for (Eigen::Index i = 0; i < k; ++i) out(i, j) = rep.window[static_cast<std::size_t>(i)].inner(img);
  }
  return out;
}

std::vector<CMatrix> correlation_eval(const RepPair& rep, const std::vector<WordPair>& pairs) {
  std::vector<CMatrix> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(correlation_block(rep, rep.left_word(p.left), rep.right_word(p.right)));
  return out;
}

CMatrix dense_alice(const EmbezzlementFamily& f) { return f.alice.dense(); }
CMatrix dense_bob(const EmbezzlementFamily& f) { return f.bob.dense(); }

}  // namespace telecode
