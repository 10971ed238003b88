#include "telecode/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "telecode/correlations.hpp"
#include "telecode/embezzlement.hpp"
#include "telecode/errors.hpp"
#include "telecode/group_words.hpp"
#include "telecode/homomorphisms.hpp"
#include "telecode/protocols.hpp"
#include "telecode/weyl_pauli.hpp"

namespace telecode::cli {

Json Thresholds::to_json() const {
  Json j;
  j["exact"] = exact;
  j["crossed"] = crossed;
  j["compose"] = compose;
  j["closed_form"] = closed_form;
  j["embezzle_c"] = embezzle_c;
  j["shift_factor"] = shift_factor;
  j["ucp_eps"] = ucp_eps;
  j["rank_tol"] = rank_tol;
  j["obstruction_tol"] = obstruction_tol;
  return j;
}

Json checks_to_json(const CheckList& c) {
  Json arr = Json::array();
  for (const auto& x : c.checks()) {
    Json j;
    j["name"] = x.name;
    j["ref"] = x.ref;
    j["residual"] = x.residual;
    j["threshold"] = x.threshold;
    j["pass"] = x.pass();
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string checks_to_csv(const CheckList& c) {
  std::ostringstream os;
  os << "name,ref,residual,threshold,pass\n" << std::setprecision(17);
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  for (const auto& x : c.checks())
    os << quote(x.name) << ',' << quote(x.ref) << ',' << x.residual << ',' << x.threshold << ','
       << (x.pass() ? "true" : "false") << '\n';
  return os.str();
}

namespace {

struct Config {
  std::string command;
  std::string suite = "all";
  std::optional<int> d;
  int m = 2;
  std::optional<int> n;
  int dim = 2;
  std::optional<std::size_t> levels;
  int depth = 20;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  double rank_tol = 1e-8;
  std::string out;
  std::string csv;
  int jobs = 1;
  std::string rho;
  std::string in;
  std::string target = "f4_m2";
  std::string action;
  std::string word;
  std::string group = "zzf";
  std::string embedding = "iii";
  int tail_j = 0;
  int tail_k = 0;
  bool fault = false;
  bool verbatim = false;
};

struct Outcome {
  Json result = Json::object();
  CheckList checks;
};

std::vector<int> d_list(const Config& c, int lo, int hi) {
  if (c.d) return {*c.d};
  std::vector<int> v;
  for (int d = lo; d <= hi; ++d) v.push_back(d);
  return v;
}

void require_d(int d) {
  if (d < 2 || d > 16) throw UsageError("--d must lie in 2..16");
}

std::string tag(const std::string& base, int d) { return base + "[d=" + std::to_string(d) + "]"; }

// ---------------------------------------------------------------- pauli

PauliWord random_pauli_word(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 4), lab(0, d - 1), ex(1, 2), sg(0, 1);
  PauliWord w;
  w.d = d;
  const int n = len(rng);
  for (int a = 0; a < n; ++a) {
    PauliLetter l;
    do {
      l.j = lab(rng);
      l.k = lab(rng);
    } while (!w.letters.empty() && w.letters.back().j == l.j && w.letters.back().k == l.k);
    l.exponent = ex(rng) * (sg(rng) ? 1 : -1);
    w.letters.push_back(l);
  }
  w.tail_j = lab(rng);
  w.tail_k = lab(rng);
  return w;
}

Outcome suite_pauli(const Config& c, const Thresholds& t) {
  Outcome o;
  const int count = c.n.value_or(50);
  for (int d : d_list(c, 2, 6)) {
    require_d(d);
    const CMatrix x = pauli_x(d), z = pauli_z(d), id = identity(static_cast<std::size_t>(d));
    o.checks.add(tag("pauli.x_order", d), "pauli", (unitary_power(x, d) - id).norm(), t.exact);
    o.checks.add(tag("pauli.z_order", d), "pauli", (unitary_power(z, d) - id).norm(), t.exact);
    o.checks.add(tag("pauli.commutation", d), "pauli", (x * z - root_of_unity(d, 1) * z * x).norm(), t.exact);
    double tres = 0.0, mres = 0.0;
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        tres = std::max(tres, (t_op(d, j, k) - unitary_power(x, j) * unitary_power(z, k)).norm());
        for (int j2 = 0; j2 < d; ++j2)
          for (int k2 = 0; k2 < d; ++k2) {
            const PauliLabel a(d, root_of_unity(2 * d, j + k2), j, k), b(d, root_of_unity(d, j2), j2, k2);
            mres = std::max(mres, (t_op(pauli_mul(a, b)) - t_op(a) * t_op(b).adjoint()).norm());
          }
      }
    o.checks.add(tag("pauli.t_op", d), "pauli", tres, t.exact);
    o.checks.add(tag("pauli.mul", d), "pauli_mul", mres, t.exact);
    const auto basis = entangled_basis(d);
    CMatrix g(d * d, d * d);
    for (int a = 0; a < d * d; ++a)
      for (int b = 0; b < d * d; ++b)
        g(a, b) = basis.vectors[static_cast<std::size_t>(a)].amplitudes.dot(basis.vectors[static_cast<std::size_t>(b)].amplitudes);
    o.checks.add(tag("pauli.entangled_basis_orthonormal", d), "phi", (g - CMatrix::Identity(d * d, d * d)).norm(), t.exact);

    std::mt19937_64 rng(derive_seed(c.seed, static_cast<std::uint64_t>(d)));
    const BrownRep brown = random_brown_rep(d, static_cast<std::size_t>(c.dim), derive_seed(c.seed, 100 + d));
    double lam = 0.0, mat = 0.0;
    for (int i = 0; i < count; ++i) {
      const PauliWord w = random_pauli_word(d, rng);
      lam = std::max(lam, std::abs(word_lambda(w) - word_lambda_iterated(w)));
      const CrossedWord cw = CrossedWord::from_letters(d, w.letters, w.tail_j, w.tail_k);
      mat = std::max(mat, (sigma2_word_matrix(brown, cw) - collapsed_word_matrix(brown, sigma2_word_image(cw))).norm());
    }
    o.checks.add(tag("pauli.lambda_closed_vs_iterated", d), "lambda", lam, t.exact);
    o.checks.add(tag("pauli.lambda_matrix_oracle", d), "lambda", mat, t.exact);
  }
  return o;
}

// ---------------------------------------------------------------- protocols

Outcome suite_protocols(const Config& c, const Thresholds& t) {
  Outcome o;
  const int count = c.n.value_or(20);
  for (int d : d_list(c, 2, 6)) {
    require_d(d);
    double tp = 0.0, sd = 0.0, r1 = 0.0, r2 = 0.0, chan = 0.0;
    const auto tmap = teleport_map(d);
    for (int i = 0; i < count; ++i) {
      const auto s = derive_seed(c.seed, static_cast<std::uint64_t>(d * 100000 + i));
      const DensityMatrix rho = DensityMatrix::random(d, s);
      tp = std::max(tp, (teleport(rho).matrix() - rho.matrix()).norm());
      chan = std::max(chan, (tmap(rho.matrix()) - rho.matrix()).norm());
      r1 = std::max(r1, (t1_map(s1_map(rho.matrix())) - rho.matrix()).norm());
      const ClassicalDist p = ClassicalDist::random(d, s ^ 0x5bd1e995ULL);
      const ClassicalDist q = superdense(p);
      CVector pv(d * d);
      for (int a = 0; a < d * d; ++a) {
        pv(a) = p.probs()[static_cast<std::size_t>(a)];
        sd = std::max(sd, std::abs(q.probs()[static_cast<std::size_t>(a)] - p.probs()[static_cast<std::size_t>(a)]));
      }
      r2 = std::max(r2, (t2_map(s2_map(pv, d), d) - pv).norm());
    }
    o.checks.add(tag("protocols.teleport", d), "tp", tp, t.exact);
    o.checks.add(tag("protocols.teleport_stages", d), "tp", chan, t.exact);
    o.checks.add(tag("protocols.superdense", d), "sd", sd, t.exact);
    if (d <= 5) {
      o.checks.add(tag("protocols.t1_s1", d), "os", r1, t.exact);
      o.checks.add(tag("protocols.t2_s2", d), "os", r2, t.exact);
    }
  }
  return o;
}

// ---------------------------------------------------------------- isomorphism

Outcome suite_isomorphism(const Config& c, const Thresholds& t) {
  Outcome o;
  for (int d : d_list(c, 2, 3)) {
    require_d(d);
    const auto n = static_cast<std::size_t>(c.dim);
    if (n < 1) throw UsageError("--dim must be positive");
    const BrownRep brown = random_brown_rep(d, n, derive_seed(c.seed, 2 * d));
    const FreeRep free = random_free_rep(d, n, derive_seed(c.seed, 2 * d + 1));
    o.checks.append(check_ue(d, t.crossed));
    o.checks.append(check_covariance(brown, t.crossed));
    std::optional<BlockFault> fault;
    if (c.fault) fault = BlockFault{0, 1, 1e-3};
    o.checks.append(compose_identity_check(brown, t.compose, fault));
    o.checks.append(compose_identity_check_free(free, t.compose));
    const BrownRep s1 = sigma1(free);
    o.checks.add(tag("sigma1.fundamental_unitary", d), "oa", unitarity_residual(s1.fundamental()), t.exact);
    double u2 = 0.0, dual = 0.0;
    const auto a = sigma2_images(brown), b = sigma2_conjugation_images(brown);
    for (std::size_t i = 0; i < a.size(); ++i) {
      u2 = std::max(u2, unitarity_residual(a[i]));
      dual = std::max(dual, (a[i] - b[i]).norm());
    }
    o.checks.add(tag("sigma2.unitary", d), "oa", u2, t.exact);
    o.checks.add(tag("sigma2.dual_formula", d), "oa", dual, t.exact);
  }
  return o;
}

// ---------------------------------------------------------------- words

Word random_word(const SpecPtr& spec, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> fac(0, spec->size() - 1);
  std::uniform_int_distribution<long> ex(-3, 3);
  std::vector<Letter> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) raw.push_back({fac(rng), ex(rng)});
  return Word::reduce(spec, raw);
}

Outcome suite_words(const Config& c, const Thresholds&) {
  Outcome o;
  const int count = c.n.value_or(500);
  std::mt19937_64 rng(derive_seed(c.seed, 77));
  for (const auto& e : {embedding_iii(), embedding_iv(), embedding_v()}) {
    std::size_t idem = 0, inv = 0, hom = 0;
    for (int i = 0; i < count; ++i) {
      const Word a = random_word(e.source, rng, 12), b = random_word(e.source, rng, 12);
      if (!(Word::reduce(e.source, a.letters()) == a)) ++idem;
      if (!(a * a.inverse()).is_identity()) ++inv;
      if (!(e.apply(a * b) == e.apply(a) * e.apply(b))) ++hom;
    }
    o.checks.add("words.reduce_idempotent[" + e.name + "]", "words", static_cast<double>(idem), 0.0);
    o.checks.add("words.inverse[" + e.name + "]", "words", static_cast<double>(inv), 0.0);
    o.checks.add("words.homomorphism[" + e.name + "]", "embedding", static_cast<double>(hom), 0.0);
    o.checks.append(e.relator_checks());
  }
  return o;
}

// ---------------------------------------------------------------- embezzlement

Outcome suite_embezzlement(const Config& c, const Thresholds& t) {
  Outcome o;
  const std::size_t top = c.levels.value_or(1024);
  if (top < 2) throw UsageError("--levels must be at least 2");
  Json sweep = Json::array();
  double prev_err = 1e300, prev_dist = 1e300, mono = 0.0, dmono = 0.0, ratio = 0.0, cf = 0.0, pos = 0.0;
  const auto target = target_catalog("f4_m2");
  for (std::size_t n = 2; n <= top; n *= 2) {
    RealizeOptions ro;
    ro.ucp_eps = t.ucp_eps;
    ro.exact_tol = t.exact;
    const Realization r = realize(target, n, ro);
    const double err = r.embezzlement_err;
    cf = std::max(cf, std::abs(err - embezzlement_error_closed_form(n)));
    mono = std::max(mono, err - prev_err);
    dmono = std::max(dmono, r.distance - prev_dist);
    ratio = std::max(ratio, r.distance / err);
    if (!(r.distance > 0.0)) pos = 1.0;
    prev_err = err;
    prev_dist = r.distance;
    Json p;
    p["levels"] = n;
    p["err"] = err;
    p["distance"] = r.distance;
    p["ratio"] = r.distance / err;
    sweep.push_back(std::move(p));
  }
  o.checks.add("embezzle.closed_form", "appx", cf, t.closed_form);
  o.checks.add("embezzle.err_nonincreasing", "appx", std::max(mono, 0.0), 0.0);
  o.checks.add("embezzle.distance_nonincreasing", "value", std::max(dmono, 0.0), 0.0);
  o.checks.add("embezzle.deviation_over_err", "value", ratio, t.embezzle_c);
  o.checks.add("embezzle.distance_positive", "value", pos, 0.0);
  o.result["sweep"] = std::move(sweep);
  return o;
}

// ---------------------------------------------------------------- correlations

void realization_checks(const Realization& r, const Thresholds& t, CheckList& c) {
  c.append(r.chain_checks);
  double exact = 0.0, lim = 0.0;
  for (const auto& d : r.entry_deviations) (d.exact ? exact : lim) = std::max(d.exact ? exact : lim, d.deviation);
  c.add(r.target + ".exact_entries", "construction", exact, t.exact);
  c.add(r.target + ".limited_entries_over_err", "embezzle", lim / r.embezzlement_err, t.embezzle_c);
  c.add(r.target + ".distance_positive", "non_closure", r.distance > 0.0 ? 0.0 : 1.0, 0.0);
}

template <class F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Outcome suite_correlations(const Config& c, const Thresholds& t) {
  Outcome o;
  const auto names = catalog_names();
  const std::size_t n = c.levels.value_or(64);
  std::vector<Realization> rs(names.size());
  RealizeOptions ro;
  ro.ucp_eps = t.ucp_eps;
  ro.exact_tol = t.exact;
  parallel_for(names.size(), c.jobs, [&](std::size_t i) { rs[i] = realize(target_catalog(names[i]), n, ro); });
  Json dist = Json::object();
  for (const auto& r : rs) {
    realization_checks(r, t, o.checks);
    dist[r.target] = r.distance;
  }
  o.result["levels"] = n;
  o.result["distances"] = std::move(dist);
  return o;
}

// ---------------------------------------------------------------- commands

Outcome cmd_verify(const Config& c, const Thresholds& t) {
  const std::vector<std::string> all = {"pauli", "protocols", "isomorphism", "words", "embezzlement", "correlations"};
  std::vector<std::string> suites;
  if (c.suite == "all") suites = all;
  else if (std::find(all.begin(), all.end(), c.suite) != all.end()) suites = {c.suite};
  else throw UsageError("unknown suite: " + c.suite);
  Outcome o;
  for (const auto& s : suites) {
    Outcome part;
    if (s == "pauli") part = suite_pauli(c, t);
    else if (s == "protocols") part = suite_protocols(c, t);
    else if (s == "isomorphism") part = suite_isomorphism(c, t);
    else if (s == "words") part = suite_words(c, t);
    else if (s == "embezzlement") part = suite_embezzlement(c, t);
    else part = suite_correlations(c, t);
    o.checks.append(part.checks);
    if (!part.result.empty()) o.result[s] = std::move(part.result);
  }
  return o;
}

Outcome cmd_teleport(const Config& c, const Thresholds& t) {
  Outcome o;
  DensityMatrix rho = [&] {
    if (!c.rho.empty()) return DensityMatrix(matrix_from_json(load_json_file(c.rho)));
    const int d = c.d.value_or(2);
    require_d(d);
    return DensityMatrix::random(d, c.seed);
  }();
  const int d = rho.dim();
  if (c.d && *c.d != d) throw UsageError("--d differs from the dimension of --rho");
  const DensityMatrix outm = teleport(rho);
  o.checks.add(tag("teleport.identity", d), "tp", (outm.matrix() - rho.matrix()).norm(), t.exact);
  o.checks.add(tag("teleport.stages", d), "tp", (teleport_map(d)(rho.matrix()) - rho.matrix()).norm(), t.exact);
  o.result["d"] = d;
  o.result["output"] = matrix_to_json(outm.matrix());
  return o;
}

Outcome cmd_superdense(const Config& c, const Thresholds& t) {
  Outcome o;
  const int d = c.d.value_or(2);
  require_d(d);
  const ClassicalDist p = ClassicalDist::random(d, c.seed);
  const ClassicalDist q = superdense(p);
  double res = 0.0;
  for (std::size_t i = 0; i < p.probs().size(); ++i) res = std::max(res, std::abs(p.probs()[i] - q.probs()[i]));
  o.checks.add(tag("superdense.identity", d), "sd", res, t.exact);
  o.result["d"] = d;
  o.result["input"] = p.probs();
  o.result["output"] = q.probs();
  return o;
}

Outcome cmd_embezzle(const Config& c, const Thresholds& t) {
  Outcome o;
  const std::size_t n = c.levels.value_or(16);
  const EmbezzlementFamily f = embezzle_unitaries(n);
  const double cf = embezzlement_error_closed_form(n);
  const cplx overlap = f.h0.inner(f.h0.apply(f.alice, f.bob));
  o.checks.add("embezzle.closed_form", "appx", std::abs(f.err - cf), t.closed_form);
  o.checks.add("embezzle.alice_unitary", "appx",
               frobenius_distance(f.alice * f.alice.adjoint(), MonomialOp::identity(f.dim_alice())), t.exact);
  o.checks.add("embezzle.bob_unitary", "appx",
               frobenius_distance(f.bob * f.bob.adjoint(), MonomialOp::identity(f.dim_bob())), t.exact);
  o.result["levels"] = n;
  o.result["err"] = f.err;
  o.result["closed_form"] = cf;
  o.result["overlap_h0"] = complex_to_json(overlap);
  std::vector<double> head(f.xi.begin(), f.xi.begin() + static_cast<long>(std::min<std::size_t>(n, 16)));
  o.result["xi_head"] = head;
  return o;
}

Json verdict_to_json(const ObstructionVerdict& v) {
  Json j;
  j["case"] = to_string(v.kind);
  j["residual"] = v.residual;
  j["scalar_residual"] = v.scalar_residual;
  j["splitting_residual"] = v.splitting_residual;
  j["rank_h0"] = v.rank_h0;
  j["rank_h1"] = v.rank_h1;
  j["rank_eta"] = v.rank_eta;
  j["rank_p1"] = v.rank_p1;
  j["rank_p2"] = v.rank_p2;
  j["summary"] = v.summary;
  return j;
}

Outcome cmd_correlation(const Config& c, const Thresholds& t) {
  Outcome o;
  const CorrelationTarget target = target_catalog(c.target);
  const std::size_t n = c.levels.value_or(16);
  RealizeOptions ro;
  ro.ucp_eps = t.ucp_eps;
  ro.exact_tol = t.exact;
  if (c.verbatim) ro.convention = SignConvention::verbatim;
  const Realization r = realize(target, n, ro);
  realization_checks(r, t, o.checks);
  Json entries = Json::array();
  for (std::size_t i = 0; i < r.tensor.labels.size(); ++i) {
    Json e;
    e["label"] = r.tensor.labels[i].text();
    e["raw"] = matrix_to_json(r.tensor.entries[i]);
    e["normalized"] = matrix_to_json(r.normalized.entries[i]);
    entries.push_back(std::move(e));
  }
  Json devs = Json::array();
  for (const auto& d : r.entry_deviations) {
    Json e;
    e["label"] = d.label;
    e["row"] = d.row;
    e["col"] = d.col;
    e["target"] = complex_to_json(d.target);
    e["value"] = complex_to_json(d.value);
    e["deviation"] = d.deviation;
    e["exact"] = d.exact;
    devs.push_back(std::move(e));
  }
  o.result["target"] = r.target;
  o.result["N"] = n;
  o.result["err"] = r.embezzlement_err;
  o.result["window"] = r.window_names;
  o.result["entries"] = std::move(entries);
  o.result["deviations"] = std::move(devs);
  o.result["distance"] = r.distance;
  o.result["normalized_distance"] = r.normalized_distance;
  o.result["gram"] = matrix_to_json(r.gram);
  o.result["ucp_eps"] = t.ucp_eps;
  if (2 * n <= 64) {
    // the two-input relations on summand 0: u_j = X^j U, v_k = X^k V
    const EmbezzlementFamily f = embezzle_unitaries(n);
    const CMatrix u0 = f.alice.dense(), v0 = f.bob.dense();
    const CMatrix u1 = alice_x(n).dense() * u0, v1 = bob_x(n).dense() * v0;
    const auto v = obstruction_check(u0, u1, v0, v1, f.h0.dense(), f.h1.dense(), t.obstruction_tol, t.rank_tol);
    o.result["obstruction"] = verdict_to_json(v);
  } else {
    o.result["obstruction"] = nullptr;
  }
  return o;
}

Outcome cmd_obstruct(const Config& c, const Thresholds& t) {
  Outcome o;
  ObstructionVerdict v;
  if (!c.in.empty()) {
    const auto cert = certificate_from_json(load_json_file(c.in));
    v = obstruction_check(cert.u0, cert.u1, cert.v0, cert.v1, cert.h0, cert.h1, t.obstruction_tol, t.rank_tol);
    o.result["source"] = c.in;
  } else {
    const ShiftConstruction s = shift_construction(c.depth);
    v = obstruction_check(s.u0, s.u1, s.v0, s.v1, s.h0, s.h1, t.obstruction_tol, t.rank_tol);
    const double bound = t.shift_factor * std::pow(2.0, -0.5 * c.depth);
    o.checks.add("shift.residual_bound[D=" + std::to_string(c.depth) + "]", "fact", v.residual, bound);
    o.checks.add("shift.closed_form[D=" + std::to_string(c.depth) + "]", "fact",
                 std::abs(v.residual - shift_residual_closed_form(c.depth)), t.exact);
    o.result["source"] = "shift_construction";
    o.result["depth"] = c.depth;
  }
  o.checks.add("obstruction.not_valid", "fact", 0.0, 0.0);
  o.result["verdict"] = verdict_to_json(v);
  return o;
}

SpecPtr group_by_name(const std::string& name, int d) {
  if (name == "zzf") return spec_z2_z2_z();
  if (name == "free3") return spec_free3();
  if (name == "star2_3") return spec_star_z2(3);
  if (name == "star2_4") return spec_star_z2(4);
  if (name == "z3z3") return spec_z3_z3();
  if (name == "f4") return make_spec({"g00", "g10", "g01", "g11"}, {kInfiniteOrder, kInfiniteOrder, kInfiniteOrder, kInfiniteOrder});
  if (name == "free_d2") return spec_free_d2(d);
  throw UsageError("unknown group: " + name);
}

Outcome cmd_words(const Config& c, const Thresholds& t) {
  Outcome o;
  if (c.word.empty()) throw UsageError("words: missing word");
  o.result["action"] = c.action;
  o.result["input"] = c.word;
  if (c.action == "reduce") {
    const Word w = Word::parse(group_by_name(c.group, c.d.value_or(2)), c.word);
    o.result["group"] = c.group;
    o.result["reduced"] = w.to_string();
    o.result["syllables"] = w.syllables();
    o.result["length"] = w.length();
    o.checks.add("words.reduce_idempotent", "words", Word::reduce(w.spec(), w.letters()) == w ? 0.0 : 1.0, 0.0);
  } else if (c.action == "embed") {
    const GroupEmbedding e = embedding_by_name(c.embedding);
    const Word w = Word::parse(e.source, c.word);
    o.result["embedding"] = e.name;
    o.result["image"] = e.apply(w).to_string();
    o.checks.append(e.relator_checks());
  } else if (c.action == "trace") {
    const int d = c.d.value_or(2);
    require_d(d);
    const CrossedWord x(d, Word::parse(spec_free_d2(d), c.word), c.tail_j, c.tail_k);
    const auto img = sigma2_word_image(x);
    o.result["d"] = d;
    o.result["lambda"] = complex_to_json(img.lambda);
    Json labels = Json::array();
    for (const auto& l : img.labels) labels.push_back(pauli_to_json(l));
    o.result["labels"] = std::move(labels);
    o.result["exponents"] = img.exponents;
    o.result["trivial_base"] = img.trivial_base;
    o.result["trace"] = complex_to_json(img.trace);
    o.result["crossed_trace"] = complex_to_json(crossed_trace(x));
    const PauliWord pw = x.pauli_word();
    o.checks.add("words.lambda_closed_vs_iterated", "lambda", std::abs(word_lambda(pw) - word_lambda_iterated(pw)), t.exact);
  } else {
    throw UsageError("words: action must be reduce, embed or trace");
  }
  return o;
}

Outcome cmd_schmidt(const Config& c, const Thresholds& t) {
  Outcome o;
  StateVector v;
  if (!c.in.empty()) {
    v = vector_from_json(load_json_file(c.in));
  } else {
    const auto n = static_cast<std::size_t>(c.dim);
    if (n < 1) throw UsageError("--dim must be positive");
    v = StateVector(random_unit_vector(n * n, c.seed), {n, n});
  }
  if (v.factor_dims.size() < 2) throw UsageError("schmidt: vector needs factor_dims with at least two factors");
  const auto s = schmidt(v);
  double norm2 = 0.0;
  for (double x : s.coefficients) norm2 += x * x;
  CVector rebuilt = CVector::Zero(static_cast<Eigen::Index>(v.dim()));
  for (std::size_t i = 0; i < s.coefficients.size(); ++i)
    rebuilt += s.coefficients[i] * tensor(CVector(s.left_vectors.col(static_cast<Eigen::Index>(i))),
                                          CVector(s.right_vectors.col(static_cast<Eigen::Index>(i))));
  o.checks.add("schmidt.norm", "schmidt", std::abs(norm2 - v.norm() * v.norm()), t.exact);
  o.checks.add("schmidt.reconstruction", "schmidt", (rebuilt - v.amplitudes).norm(), t.exact);
  o.result["coefficients"] = s.coefficients;
  o.result["rank"] = s.rank(t.rank_tol);
  o.result["factor_dims"] = v.factor_dims;
  return o;
}

Json command_echo(const Config& c, const Thresholds& t) {
  Json j;
  j["command"] = c.command;
  if (c.command == "verify") j["suite"] = c.suite;
  if (c.command == "correlation") j["target"] = c.target;
  if (c.command == "words") {
    j["action"] = c.action;
    j["word"] = c.word;
  }
  if (c.d) j["d"] = *c.d;
  j["m"] = c.m;
  if (c.n) j["n"] = *c.n;
  j["dim"] = c.dim;
  if (c.levels) j["levels"] = *c.levels;
  j["depth"] = c.depth;
  j["seed"] = c.seed;
  j["tol"] = t.exact;
  j["rank_tol"] = t.rank_tol;
  j["jobs"] = c.jobs;
  if (!c.rho.empty()) j["rho"] = c.rho;
  if (!c.in.empty()) j["in"] = c.in;
  if (c.fault) j["fault"] = true;
  if (c.verbatim) j["verbatim"] = true;
  return j;
}

void add_common(CLI::App* a, Config& c) {
  a->add_option("--d", c.d, "local dimension");
  a->add_option("--m", c.m, "number of outputs");
  a->add_option("--n", c.n, "sample count");
  a->add_option("--dim", c.dim, "representation dimension");
  a->add_option("--levels", c.levels, "embezzlement levels N");
  a->add_option("--depth", c.depth, "shift truncation depth D");
  a->add_option("--seed", c.seed, "random seed (TELECODE_SEED overrides)");
  a->add_option("--tol", c.tol, "identity tolerance");
  a->add_option("--rank-tol", c.rank_tol, "Schmidt rank tolerance");
  a->add_option("--out", c.out, "report path");
  a->add_option("--csv", c.csv, "CSV summary path");
  a->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"telecode: teleportation, crossed products and non-closure witnesses", "telecode"};
  app.require_subcommand(1);
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"verify", "run a verification suite"},
      {"teleport", "teleport a density matrix"},
      {"superdense", "super-dense coding roundtrip"},
      {"embezzle", "embezzlement error at N levels"},
      {"correlation", "realize a catalog correlation"},
      {"obstruct", "Schmidt obstruction check"},
      {"words", "word engine: reduce, embed, trace"},
      {"schmidt", "Schmidt decomposition"},
      {"isomorphism-check", "crossed-product isomorphism identities"},
  };
  for (const auto& s : subs) {
    CLI::App* a = app.add_subcommand(s.name, s.help);
    add_common(a, c);
    a->callback([&c, name = std::string(s.name)] { c.command = name; });
    const std::string nm = s.name;
    if (nm == "verify") a->add_option("--suite", c.suite, "pauli, protocols, isomorphism, words, embezzlement, correlations, all");
    if (nm == "teleport") a->add_option("--rho", c.rho, "density matrix JSON");
    if (nm == "correlation") {
      a->add_option("--target", c.target, "catalog target");
      a->add_flag("--verbatim", c.verbatim, "use the unmodified sign for g01");
    }
    if (nm == "obstruct" || nm == "schmidt") a->add_option("--in", c.in, "input JSON");
    if (nm == "verify" || nm == "isomorphism-check") a->add_flag("--inject-fault", c.fault, "perturb one composition block");
    if (nm == "words") {
      a->add_option("action", c.action, "reduce | embed | trace")->required();
      a->add_option("word", c.word, "word text")->required();
      a->add_option("--group", c.group, "zzf, free3, star2_3, star2_4, z3z3, f4, free_d2");
      a->add_option("--embedding", c.embedding, "iii, iv, v");
      a->add_option("--tail-j", c.tail_j, "crossed tail j");
      a->add_option("--tail-k", c.tail_k, "crossed tail k");
    }
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  if (const char* env = std::getenv("TELECODE_SEED")) {
    try {
      std::size_t used = 0;
      c.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      err << "error: TELECODE_SEED must be an unsigned integer\n";
      return kExitUsage;
    }
  }

  Thresholds t;
  if (c.tol) {
    if (!(*c.tol > 0.0)) {
      err << "error: --tol must be positive\n";
      return kExitUsage;
    }
    t.exact = t.compose = t.obstruction_tol = *c.tol;
  }
  if (!(c.rank_tol > 0.0)) {
    err << "error: --rank-tol must be positive\n";
    return kExitUsage;
  }
  t.rank_tol = c.rank_tol;

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (c.command == "verify") o = cmd_verify(c, t);
    else if (c.command == "isomorphism-check") o = suite_isomorphism(c, t);
    else if (c.command == "teleport") o = cmd_teleport(c, t);
    else if (c.command == "superdense") o = cmd_superdense(c, t);
    else if (c.command == "embezzle") o = cmd_embezzle(c, t);
    else if (c.command == "correlation") o = cmd_correlation(c, t);
    else if (c.command == "obstruct") o = cmd_obstruct(c, t);
    else if (c.command == "words") o = cmd_words(c, t);
    else if (c.command == "schmidt") o = cmd_schmidt(c, t);
    else throw UsageError("unknown command");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFail;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json report;
  report["command"] = command_echo(c, t);
  report["result"] = std::move(o.result);
  report["checks"] = checks_to_json(o.checks);
  Json summary;
  summary["total"] = o.checks.size();
  summary["passed"] = o.checks.size() - o.checks.failures();
  summary["failed"] = o.checks.failures();
  summary["max_residual"] = o.checks.max_residual();
  summary["pass"] = o.checks.all_pass();
  report["summary"] = std::move(summary);
  report["thresholds"] = t.to_json();
  report["wall_time"] = wall;

  try {
    if (!c.out.empty()) {
      save_json_file(c.out, report);
      out << c.command << ": " << (o.checks.size() - o.checks.failures()) << "/" << o.checks.size()
          << " checks passed\n";
    } else {
      out << report.dump(2) << '\n';
    }
    if (!c.csv.empty()) {
      std::ofstream csv(c.csv);
      if (!csv) throw UsageError("cannot write " + c.csv);
      csv << checks_to_csv(o.checks);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  for (const auto& name : o.checks.failed_names()) err << "FAIL " << name << '\n';
  return o.checks.all_pass() ? kExitPass : kExitFail;
}

}  // namespace telecode::cli
