#include "telecode/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "telecode/errors.hpp"

namespace telecode {

namespace {

const double kS = 1.0 / std::sqrt(2.0);

cplx root(int m, long k) {
  const double a = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(a), std::sin(a)};
}

Word w(const SpecPtr& spec, std::string_view text) { return Word::parse(spec, text); }

CorrelationLabel label(const SpecPtr& spec, std::string_view l, std::string_view r) {
  return {w(spec, l), w(spec, r)};
}

void push(CorrelationTarget& t, CorrelationLabel l, std::vector<Constraint> c) {
  t.labels.push_back(std::move(l));
  t.constraints.push_back(std::move(c));
}

// Column-0 pattern (1/√2, ±1/√2) shared by the ℤ2*ℤ2*ℤ family.
std::vector<Constraint> column0(double sign) { return {{0, 0, kS, false}, {1, 0, sign * kS, false}}; }

CorrelationTarget zzf_target() {
  CorrelationTarget t;
  t.name = "zzf";
  t.description = "ℤ2*ℤ2*ℤ correlation on the words g, s1 g and the generator s0";
  t.n = 2;
  t.group = spec_z2_z2_z();
  push(t, label(t.group, "g", "g"), column0(1));
  push(t, label(t.group, "s1 g", "s1 g"), column0(1));
  push(t, label(t.group, "s1 g", "g"), column0(-1));
  push(t, label(t.group, "g", "s1 g"), column0(-1));
  push(t, label(t.group, "s0", "s0"), {{1, 0, 1.0, true}});
  return t;
}

CorrelationTarget embedded_zzf(std::string name, std::string description, const GroupEmbedding& e) {
  CorrelationTarget src = zzf_target();
  CorrelationTarget t;
  t.name = std::move(name);
  t.description = std::move(description);
  t.n = 2;
  t.group = e.target;
  for (std::size_t i = 0; i < src.labels.size(); ++i)
    push(t,
         {e.apply(Word::parse(e.source, src.labels[i].left.to_string())),
          e.apply(Word::parse(e.source, src.labels[i].right.to_string()))},
         src.constraints[i]);
  return t;
}

CorrelationTarget f4_target() {
  CorrelationTarget t;
  t.name = "f4_m2";
  t.description = "F4 generator correlation with M2 values";
  t.n = 2;
  t.group = make_spec({"g00", "g10", "g01", "g11"}, {kInfiniteOrder, kInfiniteOrder, kInfiniteOrder, kInfiniteOrder});
  const char* names[4] = {"g00", "g10", "g01", "g11"};
  const int kk[4] = {0, 0, 1, 1};
  const int jj[4] = {0, 1, 0, 1};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      CMatrix v = CMatrix::Zero(2, 2);
      if (kk[a] == kk[b]) {
        const double sign = jj[a] == jj[b] ? 1.0 : -1.0;
        if (kk[a] == 0) {
          v(0, 0) = kS;
          v(1, 0) = sign * kS;
        } else {
          v(0, 1) = sign * kS;
          v(1, 1) = kS;
        }
      }
      std::vector<Constraint> c;
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t col = 0; col < 2; ++col)
          c.push_back({r, col, v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)), false});
      push(t, label(t.group, names[a], names[b]), std::move(c));
    }
  }
  return t;
}

CorrelationTarget q3_target() {
  CorrelationTarget t;
  t.name = "q3_42";
  t.description = "*4 ℤ2 generator correlation with M3 values";
  t.n = 3;
  t.group = spec_star_z2(4);
  push(t, label(t.group, "s0", "s0"), {{0, 0, 0.0, true}, {0, 1, 1.0, true}, {1, 0, 1.0, true}, {1, 1, 0.0, true}});
  push(t, label(t.group, "s2", "s2"),
       {{0, 2, kS, false}, {1, 2, kS, false}, {2, 0, kS, false}, {2, 1, kS, false}});
  push(t, label(t.group, "s3", "s3"), {{0, 2, 1.0, true}, {2, 0, 1.0, true}});
  const std::vector<Constraint> id2 = {{0, 0, 1.0, true}, {0, 1, 0.0, true}, {1, 0, 0.0, true}, {1, 1, 1.0, true}};
  const std::vector<Constraint> sz = {{0, 0, 1.0, true}, {0, 1, 0.0, true}, {1, 0, 0.0, true}, {1, 1, -1.0, true}};
  push(t, label(t.group, "s1", "s1"), id2);
  push(t, label(t.group, "s1", "e"), sz);
  push(t, label(t.group, "e", "s1"), sz);
  return t;
}

CorrelationTarget f3_words_target() {
  CorrelationTarget t;
  t.name = "f3_words";
  t.description = "F3 state on words of length at most two";
  t.n = 1;
  t.group = make_spec({"g0", "g1", "g2"}, {kInfiniteOrder, kInfiniteOrder, kInfiniteOrder});
  push(t, label(t.group, "g0", "g0"), {{0, 0, 0.0, true}});
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k)
      push(t, label(t.group, "g" + std::to_string(j), "g" + std::to_string(k)), {{0, 0, kS, false}});
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k)
      push(t, label(t.group, "g0 g" + std::to_string(j), "g0 g" + std::to_string(k)),
           {{0, 0, ((j - k) % 2 == 0 ? 1.0 : -1.0) * kS, false}});
  return t;
}

}  // namespace

PVMFamily spectral_pvm(const CMatrix& u, int m, int x, double order_tol) {
  require_square(u, "spectral_pvm");
  if (m < 1) throw UsageError("spectral_pvm: order must be positive");
  const auto n = static_cast<std::size_t>(u.rows());
  std::vector<CMatrix> powers;
  CMatrix p = identity(n);
  for (int t = 0; t < m; ++t) {
    powers.push_back(p);
    p = u * p;
  }
  if ((p - identity(n)).norm() > order_tol) throw UsageError("spectral_pvm: unitary is not of the given order");
  PVMFamily out;
  out.x = x;
  for (int a = 0; a < m; ++a) {
    CMatrix q = CMatrix::Zero(u.rows(), u.cols());
    for (int t = 0; t < m; ++t) q += root(m, -static_cast<long>(a) * t) * powers[static_cast<std::size_t>(t)];
    out.projections.push_back(q / static_cast<double>(m));
  }
  return out;
}

CheckList pvm_checks(const PVMFamily& pvm, double tol) {
  CheckList c;
  if (pvm.projections.empty()) return c;
  const auto n = static_cast<std::size_t>(pvm.projections[0].rows());
  CMatrix sum = CMatrix::Zero(pvm.projections[0].rows(), pvm.projections[0].cols());
  double idem = 0.0, herm = 0.0, orth = 0.0;
  for (std::size_t a = 0; a < pvm.projections.size(); ++a) {
    const auto& p = pvm.projections[a];
    sum += p;
    idem = std::max(idem, (p * p - p).norm());
    herm = std::max(herm, hermiticity_residual(p));
    for (std::size_t b = a + 1; b < pvm.projections.size(); ++b)
      orth = std::max(orth, (p * pvm.projections[b]).norm());
  }
  const std::string x = "[x=" + std::to_string(pvm.x) + "]";
  c.add("pvm.idempotent" + x, "pvm", idem, tol);
  c.add("pvm.hermitian" + x, "pvm", herm, tol);
  c.add("pvm.orthogonal" + x, "pvm", orth, tol);
  c.add("pvm.sum" + x, "pvm", (sum - identity(n)).norm(), tol);
  return c;
}

std::string CorrelationLabel::text() const { return "(" + left.to_string() + ", " + right.to_string() + ")"; }

CorrelationTarget target_catalog(std::string_view name) {
  if (name == "f4_m2") return f4_target();
  if (name == "zzf") return zzf_target();
  if (name == "q3_42") return q3_target();
  if (name == "q5_32")
    return embedded_zzf("q5_32", "*3 ℤ2 words through s0, s1, g ↦ s2 s0 s1 s2", embedding_iv());
  if (name == "q13_23")
    return embedded_zzf("q13_23", "ℤ3*ℤ3 words through aba, bab, ab²a²b", embedding_v());
  if (name == "f3_words") return f3_words_target();
  throw UsageError("unknown correlation target: " + std::string(name));
}

std::vector<std::string> catalog_names() { return {"f4_m2", "zzf", "q3_42", "q5_32", "q13_23", "f3_words"}; }

std::vector<EntryDeviation> deviations(const CorrelationTensor& t, const CorrelationTarget& target) {
  if (t.n != target.n || t.labels.size() != target.labels.size() || t.entries.size() != t.labels.size())
    throw UsageError("correlation tensor does not match target " + target.name);
  std::vector<EntryDeviation> out;
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    if (!(t.labels[i].left == target.labels[i].left) || !(t.labels[i].right == target.labels[i].right))
      throw UsageError("label mismatch at " + t.labels[i].text() + " vs " + target.labels[i].text());
    const auto& e = t.entries[i];
    if (static_cast<std::size_t>(e.rows()) != t.n || static_cast<std::size_t>(e.cols()) != t.n)
      throw DimensionError("correlation block has wrong size");
    for (const auto& c : target.constraints[i]) {
      EntryDeviation d;
      d.label = target.labels[i].text();
      d.row = c.row;
      d.col = c.col;
      d.target = c.value;
      d.value = e(static_cast<Eigen::Index>(c.row), static_cast<Eigen::Index>(c.col));
      d.deviation = std::abs(d.value - d.target);
      d.exact = c.exact;
      out.push_back(std::move(d));
    }
  }
  return out;
}

double distance(const CorrelationTensor& t, const CorrelationTarget& target) {
  double m = 0.0;
  for (const auto& d : deviations(t, target)) m = std::max(m, d.deviation);
  return m;
}

CMatrix ucp_normalizer(const CMatrix& gram, double eps) {
  require_square(gram, "ucp_normalizer");
  if (!(eps > 0.0)) throw UsageError("ucp_normalizer: eps must be positive");
  const CMatrix h = 0.5 * (gram + gram.adjoint()) + eps * identity(static_cast<std::size_t>(gram.rows()));
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  Eigen::VectorXd ev = es.eigenvalues();
  if (ev.minCoeff() <= 0.0) throw ValidationError("ucp_normalizer: Gram matrix is not positive semidefinite");
  Eigen::VectorXd inv = ev.array().rsqrt();
  return es.eigenvectors() * inv.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

CorrelationTensor ucp_normalize(const CorrelationTensor& t, const CMatrix& gram, double eps) {
  if (static_cast<std::size_t>(gram.rows()) != t.n) throw DimensionError("ucp_normalize: Gram size differs from n");
  const CMatrix s = ucp_normalizer(gram, eps);
  CorrelationTensor out = t;
  for (auto& e : out.entries) e = s * e * s;
  return out;
}

double restricted_distance(const MonomialOp& big, const MonomialOp& small, std::size_t block) {
  const std::size_t sd = small.dim();
  if ((block + 1) * sd > big.dim()) throw DimensionError("restricted_distance: block out of range");
  double acc = 0.0;
  for (std::size_t i = 0; i < sd; ++i) {
    const std::size_t col = block * sd + i;
    if (big.target(col) == block * sd + small.target(i))
      acc += std::norm(big.phase(col) - small.phase(i));
    else
      acc += std::norm(big.phase(col)) + std::norm(small.phase(i));
  }
  return std::sqrt(acc);
}

RepPair rep_pair_q3(const EmbezzlementFamily& f) {
  const auto n = f.levels, bd = 2 * n;
  RepPair r;
  r.name = "q3";
  r.group = spec_star_z2(4);
  r.levels = n;
  r.err = f.err;
  auto side = [&](const MonomialOp& z, const MonomialOp& x, const MonomialOp& u) {
    const auto id = MonomialOp::identity(bd);
    return std::vector<MonomialOp>{
        direct_sum({z, z}),
        direct_sum({x, x}),
        block_monomial(2, bd, {{1, 0, u}, {0, 1, u.adjoint()}}),
        block_monomial(2, bd, {{0, 1, id}, {1, 0, id}}),
    };
  };
  r.left = side(alice_z(n), alice_x(n), f.alice);
  r.right = side(bob_z(n), bob_x(n), f.bob);
  const BiState h0 = f.h0.embed(0, 2, 0, 2);
  const BiState h1 = f.h1.embed(0, 2, 0, 2);
  r.window = {h0, h1, h0.apply(r.left[3], r.right[3])};
  r.window_names = {"h0", "h1", "h2"};
  return r;
}

RepPair rep_pair_q5(const EmbezzlementFamily& f) {
  const auto n = f.levels, bd = 2 * n;
  RepPair r;
  r.name = "q5";
  r.group = spec_star_z2(3);
  r.levels = n;
  r.err = f.err;
  auto side = [&](const MonomialOp& z, const MonomialOp& x, const MonomialOp& u) {
    const auto id = MonomialOp::identity(bd);
    return std::vector<MonomialOp>{
        block_monomial(3, bd, {{0, 0, z}, {1, 2, id}, {2, 1, id}}),
        block_monomial(3, bd, {{0, 0, x}, {1, 2, u}, {2, 1, u.adjoint()}}),
        block_monomial(3, bd, {{0, 1, id}, {1, 0, id}, {2, 2, id}}),
    };
  };
  r.left = side(alice_z(n), alice_x(n), f.alice);
  r.right = side(bob_z(n), bob_x(n), f.bob);
  const BiState k0 = f.h0.embed(0, 3, 0, 3);
  const BiState k1 = f.h1.embed(0, 3, 0, 3);
  const BiState k2 = k0.apply(r.left[2], r.right[2]);
  const BiState k3 = k2.apply(r.left[1], r.right[1]);
  const BiState k4 = k3.apply(r.left[0], r.right[0]);
  r.window = {k0, k1, k2, k3, k4};
  r.window_names = {"k0", "k1", "k2", "k3", "k4"};
  return r;
}

RepPair rep_pair_q13(const EmbezzlementFamily& f) {
  const auto n = f.levels, bd = 2 * n;
  // summands: 0, p1, p2, q1, q2, r3
  enum : std::size_t { s0 = 0, p1 = 1, p2 = 2, q1 = 3, q2 = 4, r3 = 5 };
  RepPair r;
  r.name = "q13";
  r.group = spec_z3_z3();
  r.levels = n;
  r.err = f.err;
  auto side = [&](const MonomialOp& z, const MonomialOp& x, const MonomialOp& u) {
    const auto id = MonomialOp::identity(bd);
    MonomialOp a = block_monomial(6, bd, {{s0, p1, id}, {p1, p2, id}, {p2, s0, id}, {q1, q2, id}, {q2, r3, id}, {r3, q1, id}});
    MonomialOp b = block_monomial(
        6, bd, {{s0, q1, id}, {q1, q2, x}, {q2, s0, x}, {r3, p1, z * u}, {p1, p2, z}, {p2, r3, u.adjoint()}});
    return std::vector<MonomialOp>{a, b};
  };
  r.left = side(alice_z(n), alice_x(n), f.alice);
  r.right = side(bob_z(n), bob_x(n), f.bob);
  const auto& A = r.left;
  const auto& B = r.right;
  const auto id = MonomialOp::identity(A[0].dim());
  const auto a2l = A[0].pow(2), b2l = A[1].pow(2), a2r = B[0].pow(2), b2r = B[1].pow(2);
  const BiState z0 = f.h0.embed(0, 6, 0, 6);
  const BiState z1 = f.h1.embed(0, 6, 0, 6);
  const BiState z2 = z0.apply(A[0], B[0]);
  const BiState z3 = z2.apply(A[1], B[1]);
  const BiState z4 = z0.apply(A[1], B[1]);
  const BiState z5 = z4.apply(a2l, a2r);
  const BiState z6 = z5.apply(b2l, b2r);
  const BiState th0 = (z0 + z1) * cplx(kS);
  const BiState z7 = th0.apply(id, B[1]);
  const BiState z8 = z7.apply(id, B[0]);
  const BiState z9 = th0.apply(A[1], id);
  const BiState z10 = z9.apply(A[0], id);
  const BiState z11 = th0.apply(A[1], B[1]);
  const BiState z12 = z11.apply(A[0], B[0]);
  r.window = {z0, z1, z2, z3, z4, z5, z6, z7, z8, z9, z10, z11, z12};
  for (int i = 0; i <= 12; ++i) r.window_names.push_back("zeta" + std::to_string(i));
  return r;
}

namespace {

RepPair truncated(const RepPair& rep, std::size_t n) {
  RepPair r = rep;
  r.window.resize(n);
  r.window_names.resize(n);
  return r;
}

CorrelationTensor make_tensor(const RepPair& rep, const std::vector<CorrelationLabel>& labels) {
  CorrelationTensor t;
  t.n = rep.window.size();
  t.labels = labels;
  std::vector<WordPair> pairs;
  for (const auto& l : labels) pairs.push_back({l.left, l.right});
  t.entries = correlation_eval(rep, pairs);
  t.provenance.rep = rep.name;
  t.provenance.levels = rep.levels;
  t.provenance.dim_left = rep.dim_left();
  t.provenance.dim_right = rep.dim_right();
  return t;
}

std::vector<Word> letter_set(const SpecPtr& g) {
  std::vector<Word> out{Word(g)};
  for (std::size_t f = 0; f < g->size(); ++f) {
    const int m = g->orders[f];
    const long top = m == kInfiniteOrder ? 1 : m - 1;
    for (long e = 1; e <= top; ++e) out.push_back(Word::generator(g, g->names[f], e));
  }
  return out;
}

bool all_finite(const SpecPtr& g) {
  return std::all_of(g->orders.begin(), g->orders.end(), [](int m) { return m != kInfiniteOrder; });
}

// Order relators and designated-word actions on summand 0.
void relator_checks(const RepPair& rep, const std::string& tag, double tol, CheckList& c) {
  for (std::size_t f = 0; f < rep.group->size(); ++f) {
    const int m = rep.group->orders[f];
    if (m == kInfiniteOrder) continue;
    const auto& name = rep.group->names[f];
    const auto idl = MonomialOp::identity(rep.dim_left()), idr = MonomialOp::identity(rep.dim_right());
    c.add(tag + ".order[" + name + ",left]", "order", frobenius_distance(rep.left[f].pow(m), idl), tol);
    c.add(tag + ".order[" + name + ",right]", "order", frobenius_distance(rep.right[f].pow(m), idr), tol);
  }
}

void word_action(const RepPair& rep, const std::string& tag, std::string_view word, const MonomialOp& want_l,
                 const MonomialOp& want_r, double tol, CheckList& c) {
  const Word wd = Word::parse(rep.group, word);
  c.add(tag + ".word[" + std::string(word) + ",left]", "word_action",
        restricted_distance(rep.left_word(wd), want_l, 0), tol);
  c.add(tag + ".word[" + std::string(word) + ",right]", "word_action",
        restricted_distance(rep.right_word(wd), want_r, 0), tol);
}

void vec_check(CheckList& c, const std::string& name, const std::string& ref, const BiState& a, const BiState& b,
               double tol) {
  c.add(name, ref, a.distance(b), tol);
}

CheckList chain_checks(const std::string& target, const RepPair& rep, const EmbezzlementFamily& f, double tol) {
  CheckList c;
  const double lim = f.err + 1e-12;
  const auto n = f.levels;
  const auto& W = rep.window;
  const cplx s(kS);
  CMatrix g = rep.gram();
  if (target == "f4_m2" || target == "zzf" || target == "f3_words") {
    c.add(target + ".window_orthonormal", "window", (g - CMatrix::Identity(g.rows(), g.cols())).norm(), tol);
    if (target == "zzf") {
      relator_checks(rep, target, tol, c);
      const auto xu = f.alice.adjoint() * alice_x(n) * f.alice;
      const auto xv = f.bob.adjoint() * bob_x(n) * f.bob;
      c.add("zzf.self_adjoint[U^† X U,left]", "zzf", frobenius_distance(xu, xu.adjoint()), tol);
      c.add("zzf.self_adjoint[V^† X V,right]", "zzf", frobenius_distance(xv, xv.adjoint()), tol);
    }
    if (target == "f3_words") vec_check(c, "f3.h1=(g0⊗g0)h0", "f3", W[0].apply(rep.left[0], rep.right[0]), W[1], tol);
    return c;
  }
  const BiState uv = f.h0.apply(f.alice, f.bob);
  if (target == "q3_42") {
    relator_checks(rep, target, tol, c);
    word_action(rep, target, "s0", alice_z(n), bob_z(n), tol, c);
    word_action(rep, target, "s1", alice_x(n), bob_x(n), tol, c);
    word_action(rep, target, "s2 s3", f.alice, f.bob, tol, c);
    c.add("q3.gram", "window", (g - CMatrix::Identity(3, 3)).norm(), tol);
    vec_check(c, "q3.(s0⊗s0)h0=h1", "q3", W[0].apply(rep.left[0], rep.right[0]), W[1], tol);
    vec_check(c, "q3.(s1⊗1)h0=h0", "q3", W[0].apply_left(rep.left[1]), W[0], tol);
    vec_check(c, "q3.(s1⊗1)h1=-h1", "q3", W[1].apply_left(rep.left[1]), W[1] * cplx(-1.0), tol);
    vec_check(c, "q3.(1⊗s1)h1=-h1", "q3", W[1].apply_right(rep.right[1]), W[1] * cplx(-1.0), tol);
    vec_check(c, "q3.(s2⊗s2)h2=(U⊗V)h0", "q3", W[2].apply(rep.left[2], rep.right[2]), uv.embed(0, 2, 0, 2), tol);
    vec_check(c, "q3.(s2⊗s2)h2≈θ0", "embezzle", W[2].apply(rep.left[2], rep.right[2]), (W[0] + W[1]) * s, lim);
    return c;
  }
  if (target == "q5_32") {
    relator_checks(rep, target, tol, c);
    word_action(rep, target, "s0", alice_z(n), bob_z(n), tol, c);
    word_action(rep, target, "s1", alice_x(n), bob_x(n), tol, c);
    word_action(rep, target, "s2 s0 s1 s2", f.alice, f.bob, tol, c);
    const Word om = Word::parse(rep.group, "s2 s0 s1 s2");
    const BiState wk0 = W[0].apply(rep.left_word(om), rep.right_word(om));
    vec_check(c, "q5.(s2⊗s2)k4=(ω⊗ω)k0", "q5", W[4].apply(rep.left[2], rep.right[2]), wk0, tol);
    vec_check(c, "q5.(ω⊗ω)k0=(U⊗V)h0", "q5", wk0, uv.embed(0, 3, 0, 3), tol);
    vec_check(c, "q5.(s0⊗s0)k0=k1", "q5", W[0].apply(rep.left[0], rep.right[0]), W[1], tol);
    vec_check(c, "q5.(s2⊗s2)k4≈θ0", "embezzle", W[4].apply(rep.left[2], rep.right[2]), (W[0] + W[1]) * s, lim);
    c.add("q5.unit_window", "window", (g.diagonal() - CVector::Ones(5)).norm(), tol);
    return c;
  }
  if (target == "q13_23") {
    relator_checks(rep, target, tol, c);
    word_action(rep, target, "a b a", alice_z(n), bob_z(n), tol, c);
    word_action(rep, target, "b a b", alice_x(n), bob_x(n), tol, c);
    word_action(rep, target, "a b2 a2 b", f.alice, f.bob, tol, c);
    const auto& A = rep.left;
    const auto& B = rep.right;
    const auto id = MonomialOp::identity(rep.dim_left());
    const BiState th0 = (W[0] + W[1]) * s;
    const BiState th1 = (W[0] - W[1]) * s;
    const Word gw = Word::parse(rep.group, "a b2 a2 b");
    const BiState gz0 = W[0].apply(rep.left_word(gw), rep.right_word(gw));
    vec_check(c, "q13.(a⊗a)ζ6=(g⊗g)ζ0", "q13", W[6].apply(A[0], B[0]), gz0, tol);
    vec_check(c, "q13.(g⊗g)ζ0=(U⊗V)h0", "q13", gz0, uv.embed(0, 6, 0, 6), tol);
    vec_check(c, "q13.(a⊗a)ζ3=ζ1", "q13", W[3].apply(A[0], B[0]), W[1], tol);
    vec_check(c, "q13.(b⊗1)ζ10=θ1", "q13", W[10].apply(A[1], id), th1, tol);
    vec_check(c, "q13.(1⊗b)ζ8=θ1", "q13", W[8].apply(id, B[1]), th1, tol);
    vec_check(c, "q13.(b⊗b)ζ12=θ0", "q13", W[12].apply(A[1], B[1]), th0, tol);
    vec_check(c, "q13.(a⊗a)ζ6≈θ0", "embezzle", W[6].apply(A[0], B[0]), th0, lim);
    c.add("q13.unit_window", "window", (g.diagonal() - CVector::Ones(13)).norm(), tol);
    return c;
  }
  return c;
}

std::vector<PvmCorrelation> pvm_tensor(const RepPair& rep) {
  std::vector<PvmCorrelation> out;
  const auto& g = rep.group;
  for (std::size_t x = 0; x < g->size(); ++x) {
    const int mx = g->orders[x];
    std::vector<MonomialOp> lp{MonomialOp::identity(rep.dim_left())};
    for (int t = 1; t < mx; ++t) lp.push_back(rep.left[x] * lp.back());
    for (std::size_t y = 0; y < g->size(); ++y) {
      const int my = g->orders[y];
      std::vector<MonomialOp> rp{MonomialOp::identity(rep.dim_right())};
      for (int t = 1; t < my; ++t) rp.push_back(rep.right[y] * rp.back());
      std::vector<CMatrix> blk;
      for (int t = 0; t < mx; ++t)
        for (int u = 0; u < my; ++u) blk.push_back(correlation_block(rep, lp[static_cast<std::size_t>(t)], rp[static_cast<std::size_t>(u)]));
      for (int a = 0; a < mx; ++a) {
        for (int b = 0; b < my; ++b) {
          CMatrix v = CMatrix::Zero(blk[0].rows(), blk[0].cols());
          for (int t = 0; t < mx; ++t)
            for (int u = 0; u < my; ++u)
              v += root(mx, -static_cast<long>(a) * t) * root(my, -static_cast<long>(b) * u) *
                   blk[static_cast<std::size_t>(t * my + u)];
          out.push_back({x, y, a, b, v / static_cast<double>(mx * my)});
        }
      }
    }
  }
  return out;
}

void pvm_tensor_checks(const std::vector<PvmCorrelation>& pvm, const CMatrix& gram, double tol, CheckList& c) {
  if (pvm.empty()) return;
  double sum_res = 0.0, neg = 0.0, herm = 0.0;
  std::size_t i = 0;
  while (i < pvm.size()) {
    CMatrix sum = CMatrix::Zero(gram.rows(), gram.cols());
    std::size_t j = i;
    for (; j < pvm.size() && pvm[j].x == pvm[i].x && pvm[j].y == pvm[i].y; ++j) {
      sum += pvm[j].value;
      herm = std::max(herm, hermiticity_residual(pvm[j].value));
      const CMatrix h = 0.5 * (pvm[j].value + pvm[j].value.adjoint());
      neg = std::max(neg, -min_eigenvalue_hermitian(h));
    }
    sum_res = std::max(sum_res, (sum - gram).norm());
    i = j;
  }
  c.add("pvm.sum_equals_gram", "pvm", sum_res, tol);
  c.add("pvm.hermitian", "pvm", herm, tol);
  c.add("pvm.positive", "pvm", std::max(neg, 0.0), tol);
}

}  // namespace

Realization realize(const CorrelationTarget& target, std::size_t levels, const RealizeOptions& opts) {
  if (levels < 2) throw UsageError("realize: need at least two levels");
  const EmbezzlementFamily f = embezzle_unitaries(levels);
  RepPair rep;
  if (target.name == "f4_m2") rep = rep_pair_f4(f, opts.convention);
  else if (target.name == "zzf") rep = rep_pair_zzf(f);
  else if (target.name == "f3_words") rep = rep_pair_f3(f);
  else if (target.name == "q3_42") rep = rep_pair_q3(f);
  else if (target.name == "q5_32") rep = rep_pair_q5(f);
  else if (target.name == "q13_23") rep = rep_pair_q13(f);
  else throw UsageError("realize: unknown target " + target.name);
  if (!(*rep.group == *target.group)) throw ConsistencyError("realize: representation group differs from target group");
  if (rep.window.size() < target.n) throw ConsistencyError("realize: window shorter than n");
  for (std::size_t i = 0; i < rep.left.size(); ++i) {
    if (!(rep.left[i] * rep.left[i].adjoint()).is_identity(1e-12) ||
        !(rep.right[i] * rep.right[i].adjoint()).is_identity(1e-12))
      throw ConsistencyError("realize: dilated generator is not unitary");
  }

  Realization out;
  out.target = target.name;
  out.levels = levels;
  out.embezzlement_err = f.err;
  out.window_names = rep.window_names;
  out.gram = rep.gram();

  const RepPair cat = truncated(rep, target.n);
  out.tensor = make_tensor(cat, target.labels);
  const CMatrix cat_gram = out.gram.topLeftCorner(static_cast<Eigen::Index>(target.n), static_cast<Eigen::Index>(target.n));
  out.normalized = ucp_normalize(out.tensor, cat_gram, opts.ucp_eps);
  out.entry_deviations = deviations(out.tensor, target);
  out.distance = distance(out.tensor, target);
  out.normalized_distance = distance(out.normalized, target);

  std::vector<CorrelationLabel> gen_labels;
  const auto letters = letter_set(rep.group);
  for (const auto& l : letters)
    for (const auto& r : letters) gen_labels.push_back({l, r});
  out.generator_tensor = make_tensor(rep, gen_labels);
  out.generator_normalized = ucp_normalize(out.generator_tensor, out.gram, opts.ucp_eps);

  out.chain_checks = chain_checks(target.name, rep, f, opts.exact_tol);
  if (all_finite(rep.group)) {
    out.pvm = pvm_tensor(rep);
    pvm_tensor_checks(out.pvm, out.gram, opts.exact_tol, out.chain_checks);
  }
  return out;
}

std::string to_string(ObstructionCase c) {
  switch (c) {
    case ObstructionCase::relations_violated: return "relations_violated";
    case ObstructionCase::schmidt_contradiction: return "schmidt_contradiction";
    case ObstructionCase::inconclusive: return "inconclusive";
  }
  return "unknown";
}

CVector apply_local(const CMatrix& a, const CMatrix& b, const CVector& v) {
  const auto na = a.cols(), nb = b.cols();
  if (v.size() != na * nb) throw DimensionError("apply_local: vector dimension mismatch");
  // Row-major reshape: M(i, k) = v(i * nb + k); (a ⊗ b) v ↔ a M b^T.
  Eigen::Map<const CMatrix> mt(v.data(), nb, na);  // = M^T
  const CMatrix r = b * mt * a.transpose();         // = (a M b^T)^T
  return Eigen::Map<const CVector>(r.data(), r.size());
}

namespace {

CMatrix kernel_projector(const CMatrix& x, double thr) {
  const auto n = x.rows();
  const CMatrix d = x - CMatrix::Identity(n, n);
  Eigen::BDCSVD<CMatrix> svd(d, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  CMatrix p = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (sv(i) <= thr) p += svd.matrixV().col(i) * svd.matrixV().col(i).adjoint();
  return p;
}

std::size_t rank_of(const CVector& v, std::size_t na, std::size_t nb, double rank_tol) {
  return schmidt(StateVector(v, {na, nb})).rank(rank_tol);
}

}  // namespace

ObstructionVerdict obstruction_check(const CMatrix& u0, const CMatrix& u1, const CMatrix& v0, const CMatrix& v1,
                                     const StateVector& h0, const StateVector& h1, double tol, double rank_tol) {
  if (!(tol >= 0.0) || !(rank_tol > 0.0)) throw UsageError("obstruction_check: tolerances must be nonnegative");
  require_square(u0, "u0");
  require_square(u1, "u1");
  require_square(v0, "v0");
  require_square(v1, "v1");
  if (u0.rows() != u1.rows() || v0.rows() != v1.rows()) throw DimensionError("obstruction_check: unitary sizes differ");
  const auto na = static_cast<std::size_t>(u0.rows()), nb = static_cast<std::size_t>(v0.rows());
  if (h0.dim() != na * nb || h1.dim() != na * nb) throw DimensionError("obstruction_check: vector dimension mismatch");
  for (const CMatrix* m : {&u0, &u1, &v0, &v1}) {
    require_finite(*m, "obstruction_check");
    if (!is_unitary(*m, 1e-8)) throw UsageError("obstruction_check: operator is not unitary");
  }
  const double otol = std::max(tol, 1e-10);
  const CVector& a0 = h0.amplitudes;
  const CVector& a1 = h1.amplitudes;
  if (std::abs(a0.norm() - 1.0) > otol || std::abs(a1.norm() - 1.0) > otol || std::abs(a0.dot(a1)) > otol)
    throw UsageError("obstruction_check: h0, h1 are not orthonormal");

  ObstructionVerdict v;
  const CMatrix* us[2] = {&u0, &u1};
  const CMatrix* vs[2] = {&v0, &v1};
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const double sign = (j - k) % 2 == 0 ? 1.0 : -1.0;
      const CVector img = apply_local(*us[j], *vs[k], a0);
      const CVector want = (a0 + sign * a1) * kS;
      v.residual = std::max(v.residual, (img - want).norm());
      v.scalar_residual = std::max(v.scalar_residual, std::abs(a0.dot(img) - kS));
      v.scalar_residual = std::max(v.scalar_residual, std::abs(a1.dot(img) - sign * kS));
    }
  }
  std::ostringstream os;
  if (v.residual > tol) {
    v.kind = ObstructionCase::relations_violated;
    os << "relations violated: residual " << v.residual << " > tol " << tol;
    v.summary = os.str();
    return v;
  }

  const double thr = std::clamp(std::sqrt(tol), 1e-6, 0.5);
  const CMatrix p1 = kernel_projector(u1 * u0.adjoint(), thr);
  const CMatrix p2 = kernel_projector(v1 * v0.adjoint(), thr);
  const CMatrix q1 = CMatrix::Identity(p1.rows(), p1.cols()) - p1;
  const CMatrix q2 = CMatrix::Identity(p2.rows(), p2.cols()) - p2;
  v.rank_p1 = static_cast<std::size_t>(std::lround(p1.trace().real()));
  v.rank_p2 = static_cast<std::size_t>(std::lround(p2.trace().real()));
  v.splitting_residual = std::max((a0 - apply_local(p1, p2, a0)).norm(), (a1 - apply_local(q1, q2, a1)).norm());
  v.rank_h0 = rank_of(a0, na, nb, rank_tol);
  v.rank_h1 = rank_of(a1, na, nb, rank_tol);
  const CVector eta = (a0 + a1) * kS;
  v.rank_eta = rank_of(eta, na, nb, rank_tol);
  const std::size_t r_uv = rank_of(apply_local(u0, v0, a0), na, nb, rank_tol);

  if (v.splitting_residual > std::max(tol, 1e-8)) {
    v.kind = ObstructionCase::inconclusive;
    os << "relations hold within tol but the support splitting fails (residual " << v.splitting_residual << ")";
    v.summary = os.str();
    return v;
  }
  v.kind = ObstructionCase::schmidt_contradiction;
  os << "support splitting gives r_eta = r0 + r1 = " << v.rank_h0 + v.rank_h1 << " (measured " << v.rank_eta
     << "), local unitary equivalence gives r_eta = r0 = " << r_uv << "; r1 = " << v.rank_h1 << " > 0";
  v.summary = os.str();
  return v;
}

ObstructionVerdict obstruction_check(const ObstructionCertificate& c, double tol, double rank_tol) {
  return obstruction_check(c.u0, c.u1, c.v0, c.v1, c.h0, c.h1, tol, rank_tol);
}

ObstructionCertificate random_certificate(std::size_t na, std::size_t nb, std::uint64_t seed) {
  if (na < 1 || nb < 1) throw UsageError("random_certificate: dimensions must be positive");
  ObstructionCertificate c;
  c.u0 = random_unitary(na, derive_seed(seed, 0));
  c.u1 = random_unitary(na, derive_seed(seed, 1));
  c.v0 = random_unitary(nb, derive_seed(seed, 2));
  c.v1 = random_unitary(nb, derive_seed(seed, 3));
  const CVector a = random_unit_vector(na * nb, derive_seed(seed, 4));
  CVector b = random_unit_vector(na * nb, derive_seed(seed, 5));
  b -= a * a.dot(b);
  b /= b.norm();
  c.h0 = StateVector(a, {na, nb});
  c.h1 = StateVector(b, {na, nb});
  return c;
}

ShiftConstruction shift_construction(int depth) {
  if (depth < 4) throw UsageError("shift_construction: depth must be at least 4");
  if (depth > 200) throw UsageError("shift_construction: depth too large");
  const auto n = static_cast<Eigen::Index>(2 * depth + 1);
  ShiftConstruction s;
  s.depth = depth;
  s.shift = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) s.shift((i + 1) % n, i) = 1.0;
  s.sigma = CMatrix::Identity(n, n);
  for (Eigen::Index i = depth; i < n; ++i) s.sigma(i, i) = -1.0;
  s.u0 = s.v0 = s.shift;
  s.u1 = s.v1 = s.sigma * s.shift;
  CVector a0 = CVector::Zero(n * n);
  for (int j = -depth; j <= -1; ++j) {
    const Eigen::Index i = j + depth;
    a0(i * n + i) = std::pow(2.0, 0.5 * j);
  }
  a0 /= a0.norm();
  CVector a1 = CVector::Zero(n * n);
  a1(static_cast<Eigen::Index>(depth) * n + depth) = 1.0;
  const auto nn = static_cast<std::size_t>(n);
  s.h0 = StateVector(std::move(a0), {nn, nn});
  s.h1 = StateVector(std::move(a1), {nn, nn});
  return s;
}

double shift_residual_closed_form(int depth) {
  const double t = std::pow(2.0, -depth);
  const double norm = std::sqrt(1.0 - t);
  return std::sqrt((1.0 / norm - 1.0) * (1.0 / norm - 1.0) + t / (norm * norm)) * kS;
}

}  // namespace telecode
