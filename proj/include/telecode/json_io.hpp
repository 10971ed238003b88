#pragma once

#include <string>

#include <json.hpp>

#include "telecode/correlations.hpp"
#include "telecode/matrix_core.hpp"
#include "telecode/weyl_pauli.hpp"

namespace telecode {

using Json = nlohmann::ordered_json;

// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

// Matrix format with cols = 1, plus "factor_dims".
Json vector_to_json(const StateVector& v);
StateVector vector_from_json(const Json& j);

// {"d": d, "phase": [re, im], "j": j, "k": k}
Json pauli_to_json(const PauliLabel& p);
PauliLabel pauli_from_json(const Json& j);

Json complex_to_json(cplx z);
cplx complex_from_json(const Json& j);

Json load_json_file(const std::string& path);  // throws UsageError
void save_json_file(const std::string& path, const Json& j);

// {"u0", "u1", "v0", "v1": matrix, "h0", "h1": vector}
ObstructionCertificate certificate_from_json(const Json& j);
Json certificate_to_json(const ObstructionCertificate& c);

}  // namespace telecode
