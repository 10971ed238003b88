#include "telecode/weyl_pauli.hpp"

#include <cmath>
#include <string>

#include "telecode/errors.hpp"

namespace telecode {

namespace {

void require_modulus(int d) {
  if (d < 2) throw UsageError("Pauli modulus must be at least 2, got " + std::to_string(d));
}

}  // namespace

int mod(long value, int d) {
  long r = value % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

cplx root_of_unity(int d, long exponent) {
  const int e = mod(exponent, d);
  if (e == 0) return 1.0;
  if (2 * e == d) return -1.0;
  if (4 * e == d) return cplx(0.0, 1.0);
  if (4 * e == 3 * d) return cplx(0.0, -1.0);
  const double theta = 2.0 * kPi * e / d;
  return {std::cos(theta), std::sin(theta)};
}

PauliLabel::PauliLabel(int d_, cplx phase_, int j_, int k_) : d(d_), phase(phase_) {
  require_modulus(d);
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) throw ValidationError("PauliLabel: phase must have unit modulus");
  j = mod(j_, d);
  k = mod(k_, d);
}

CMatrix pauli_x(int d) { return pauli_x_monomial(d).dense(); }
CMatrix pauli_z(int d) { return pauli_z_monomial(d).dense(); }

MonomialOp pauli_x_monomial(int d) {
  require_modulus(d);
  std::vector<cplx> ph(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) ph[static_cast<std::size_t>(j)] = root_of_unity(d, j);
  return MonomialOp::diagonal(std::move(ph));
}

MonomialOp pauli_z_monomial(int d) {
  require_modulus(d);
  std::vector<std::uint32_t> t(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) t[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>((j + 1) % d);
  return MonomialOp::permutation(std::move(t));
}

CMatrix t_op(const PauliLabel& label) {
  const int d = label.d;
  // X^j Z^k |i> = ω^{j(i+k)} |i+k>
  CMatrix m = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const int row = mod(i + label.k, d);
    m(row, i) = label.phase * root_of_unity(d, static_cast<long>(label.j) * row);
  }
  return m;
}

CMatrix t_op(int d, int j, int k) { return t_op(PauliLabel::plain(d, j, k)); }

StateVector phi_vec(int d, int j, int k) {
  require_modulus(d);
  const CMatrix t = t_op(d, j, k);
  CVector v = CVector::Zero(d * d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  // (T ⊗ 1) Σ_i |i>|i> = Σ_i (T|i>) ⊗ |i>
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < d; ++r) v(r * d + i) = s * t(r, i);
  return StateVector(std::move(v), {static_cast<std::size_t>(d), static_cast<std::size_t>(d)});
}

EntangledBasis entangled_basis(int d) {
  EntangledBasis b;
  b.d = d;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) b.vectors.push_back(phi_vec(d, j, k));
  return b;
}

PauliLabel pauli_mul(const PauliLabel& a, const PauliLabel& b) {
  if (a.d != b.d) throw UsageError("pauli_mul: modulus mismatch");
  const int d = a.d;
  // X^{a1} Z^{b1} Z^{-b2} X^{-a2} = ω^{a2(b1-b2)} X^{a1-a2} Z^{b1-b2}
  const cplx ph = a.phase * std::conj(b.phase) *
                  root_of_unity(d, static_cast<long>(b.j) * (a.k - b.k));
  return PauliLabel(d, ph, a.j - b.j, a.k - b.k);
}

PauliLabel pauli_adjoint(const PauliLabel& a) {
  return pauli_mul(PauliLabel(a.d, 1.0, 0, 0), a);
}

PauliLabel pauli_compose(const PauliLabel& a, const PauliLabel& b) {
  return pauli_mul(a, pauli_adjoint(b));
}

namespace {

void require_word(const PauliWord& w) {
  require_modulus(w.d);
  if (w.letters.empty()) throw UsageError("Pauli word must be nonempty");
}

}  // namespace

std::vector<PauliLabel> collapsed_labels(const PauliWord& w) {
  require_word(w);
  const int d = w.d;
  const auto n = w.letters.size();
  std::vector<PauliLabel> out;
  out.push_back(PauliLabel::plain(d, w.letters[0].j, w.letters[0].k));
  for (std::size_t a = 0; a + 1 < n; ++a)
    out.push_back(PauliLabel::plain(d, w.letters[a + 1].j - w.letters[a].j,
                                    w.letters[a + 1].k - w.letters[a].k));
  out.push_back(PauliLabel::plain(d, w.letters[n - 1].j + w.tail_j, w.letters[n - 1].k + w.tail_k));
  return out;
}

cplx word_lambda(const PauliWord& w) {
  require_word(w);
  const auto n = w.letters.size();
  long e = 0;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    const long ja = w.letters[a].j, ka = w.letters[a].k;
    const long jb = w.letters[a + 1].j, kb = w.letters[a + 1].k;
    e += jb * (ka - kb) + (jb - ja) * (kb - ka);
  }
  e -= static_cast<long>(w.letters[n - 1].k) * w.tail_j;
  return root_of_unity(w.d, e);
}

cplx word_lambda_iterated(const PauliWord& w) {
  require_word(w);
  const int d = w.d;
  const auto n = w.letters.size();
  const auto labels = collapsed_labels(w);
  cplx lambda = 1.0;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    // T_a T_{a+1}^† = p T_{-Δ}, while T_Δ^† = q T_{-Δ}
    const auto ta = PauliLabel::plain(d, w.letters[a].j, w.letters[a].k);
    const auto tb = PauliLabel::plain(d, w.letters[a + 1].j, w.letters[a + 1].k);
    const auto prod = pauli_mul(ta, tb);
    const auto delta_adj = pauli_adjoint(labels[a + 1]);
    if (prod.j != delta_adj.j || prod.k != delta_adj.k)
      throw ConsistencyError("word_lambda_iterated: label mismatch");
    lambda *= prod.phase / delta_adj.phase;
  }
  const auto last = pauli_compose(PauliLabel::plain(d, w.letters[n - 1].j, w.letters[n - 1].k),
                                  PauliLabel::plain(d, w.tail_j, w.tail_k));
  if (last.j != labels[n].j || last.k != labels[n].k)
    throw ConsistencyError("word_lambda_iterated: tail label mismatch");
  return lambda * last.phase;
}

cplx word_lambda_product_exponent(const PauliWord& w) {
  require_word(w);
  const auto n = w.letters.size();
  long sum = 0;
  for (std::size_t l = 0; l + 1 < n; ++l)
    sum += static_cast<long>(w.letters[l + 1].j) * (w.letters[l].k - w.letters[l + 1].k);
  const long e = static_cast<long>(w.tail_j) * (w.letters[n - 1].k + w.tail_k) * sum;
  return root_of_unity(w.d, e);
}

}  // namespace telecode
