#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "telecode/cli.hpp"
#include "telecode/correlations.hpp"
#include "telecode/embezzlement.hpp"
#include "telecode/errors.hpp"
#include "telecode/group_words.hpp"
#include "telecode/homomorphisms.hpp"
#include "telecode/protocols.hpp"
#include "telecode/weyl_pauli.hpp"

namespace py = pybind11;
using namespace telecode;

namespace {

py::dict check_list(const CheckList& c) {
  py::list items;
  for (const auto& k : c.checks()) {
    py::dict d;
    d["name"] = k.name;
    d["ref"] = k.ref;
    d["residual"] = k.residual;
    d["threshold"] = k.threshold;
    d["pass"] = k.pass();
    items.append(d);
  }
  py::dict out;
  out["checks"] = items;
  out["all_pass"] = c.all_pass();
  out["max_residual"] = c.max_residual();
  return out;
}

PauliWord make_word(int d, const std::vector<std::tuple<int, int, long>>& letters, int tj, int tk) {
  PauliWord w{d, {}, tj, tk};
  for (const auto& [j, k, e] : letters) w.letters.push_back({j, k, e});
  return w;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of telecode";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);

  m.def("pauli_x", &pauli_x, py::arg("d"));
  m.def("pauli_z", &pauli_z, py::arg("d"));
  m.def("t_op", py::overload_cast<int, int, int>(&t_op), py::arg("d"), py::arg("j"), py::arg("k"));
  m.def("random_unitary", &random_unitary, py::arg("n"), py::arg("seed"));
  m.def("random_density_matrix", [](int d, std::uint64_t seed) { return DensityMatrix::random(d, seed).matrix(); },
        py::arg("d"), py::arg("seed"));

  m.def("teleport", [](const CMatrix& rho) { return teleport(DensityMatrix(rho)).matrix(); }, py::arg("rho"));
  m.def("superdense",
        [](int d, std::vector<double> p) { return superdense(ClassicalDist(d, std::move(p))).probs(); },
        py::arg("d"), py::arg("probs"));

  m.def("check_ue", [](int d, double tol) { return check_list(check_ue(d, tol)); }, py::arg("d"),
        py::arg("tol") = 1e-12);
  m.def("compose_identity_check",
        [](int d, std::size_t n, std::uint64_t seed, double tol) {
          return check_list(compose_identity_check(random_brown_rep(d, n, seed), tol));
        },
        py::arg("d"), py::arg("n") = 2, py::arg("seed") = 0, py::arg("tol") = 1e-10);

  m.def("word_lambda",
        [](int d, const std::vector<std::tuple<int, int, long>>& letters, int tj, int tk) {
          return word_lambda(make_word(d, letters, tj, tk));
        },
        py::arg("d"), py::arg("letters"), py::arg("tail_j") = 0, py::arg("tail_k") = 0);
  m.def("word_lambda_iterated",
        [](int d, const std::vector<std::tuple<int, int, long>>& letters, int tj, int tk) {
          return word_lambda_iterated(make_word(d, letters, tj, tk));
        },
        py::arg("d"), py::arg("letters"), py::arg("tail_j") = 0, py::arg("tail_k") = 0);

  m.def("embed_word",
        [](const std::string& embedding, const std::string& word) {
          const GroupEmbedding e = embedding_by_name(embedding);
          return embed(Word::parse(e.source, word), e).to_string();
        },
        py::arg("embedding"), py::arg("word"));

  m.def("embezzlement_error", &embezzlement_error_closed_form, py::arg("levels"));
  m.def("catalog_names", &catalog_names);
  m.def("realize",
        [](const std::string& target, std::size_t levels) {
          const Realization r = realize(target_catalog(target), levels);
          py::dict out;
          out["target"] = r.target;
          out["levels"] = r.levels;
          out["err"] = r.embezzlement_err;
          out["distance"] = r.distance;
          out["normalized_distance"] = r.normalized_distance;
          py::list labels, entries;
          for (std::size_t i = 0; i < r.tensor.labels.size(); ++i) {
            labels.append(r.tensor.labels[i].text());
            entries.append(r.tensor.entries[i]);
          }
          out["labels"] = labels;
          out["entries"] = entries;
          out["chain_checks"] = check_list(r.chain_checks);
          return out;
        },
        py::arg("target"), py::arg("levels"));

  m.def("shift_obstruction",
        [](int depth) {
          const ShiftConstruction s = shift_construction(depth);
          const ObstructionVerdict v = obstruction_check(s.u0, s.u1, s.v0, s.v1, s.h0, s.h1, 1e-8);
          return py::make_tuple(to_string(v.kind), v.residual);
        },
        py::arg("depth"));
  m.def("shift_residual_closed_form", &shift_residual_closed_form, py::arg("depth"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
