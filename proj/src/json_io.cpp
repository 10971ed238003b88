#include "telecode/json_io.hpp"

#include <fstream>

#include "telecode/errors.hpp"

namespace telecode {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw UsageError("json: complex entries are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const CMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(complex_to_json(m(r, c)));
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::move(data);
  return j;
}

CMatrix matrix_from_json(const Json& j) {
  const auto& rows = field(j, "rows");
  const auto& cols = field(j, "cols");
  const auto& data = field(j, "data");
  if (!rows.is_number_integer() || !cols.is_number_integer() || rows.get<long>() < 0 || cols.get<long>() < 0)
    throw UsageError("json: rows and cols must be nonnegative integers");
  const auto r = rows.get<Eigen::Index>(), c = cols.get<Eigen::Index>();
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != r * c)
    throw UsageError("json: data length differs from rows*cols");
  CMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = complex_from_json(data[static_cast<std::size_t>(i * c + k)]);
  return m;
}

Json vector_to_json(const StateVector& v) {
  Json j = matrix_to_json(v.amplitudes);
  j["factor_dims"] = v.factor_dims;
  return j;
}

StateVector vector_from_json(const Json& j) {
  CMatrix m = matrix_from_json(j);
  if (m.cols() != 1) throw UsageError("json: a vector has cols = 1");
  std::vector<std::size_t> dims;
  if (j.contains("factor_dims")) dims = j.at("factor_dims").get<std::vector<std::size_t>>();
  return StateVector(m.col(0), std::move(dims));
}

Json pauli_to_json(const PauliLabel& p) {
  Json j;
  j["d"] = p.d;
  j["phase"] = complex_to_json(p.phase);
  j["j"] = p.j;
  j["k"] = p.k;
  return j;
}

PauliLabel pauli_from_json(const Json& j) {
  return PauliLabel(field(j, "d").get<int>(), complex_from_json(field(j, "phase")), field(j, "j").get<int>(),
                    field(j, "k").get<int>());
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

ObstructionCertificate certificate_from_json(const Json& j) {
  return {matrix_from_json(field(j, "u0")), matrix_from_json(field(j, "u1")), matrix_from_json(field(j, "v0")),
          matrix_from_json(field(j, "v1")), vector_from_json(field(j, "h0")), vector_from_json(field(j, "h1"))};
}

Json certificate_to_json(const ObstructionCertificate& c) {
  Json j;
  j["u0"] = matrix_to_json(c.u0);
  j["u1"] = matrix_to_json(c.u1);
  j["v0"] = matrix_to_json(c.v0);
  j["v1"] = matrix_to_json(c.v1);
  j["h0"] = vector_to_json(c.h0);
  j["h1"] = vector_to_json(c.h1);
  return j;
}

}  // namespace telecode
