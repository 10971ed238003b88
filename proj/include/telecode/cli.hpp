#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "telecode/checks.hpp"
#include "telecode/json_io.hpp"

namespace telecode::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Every numeric threshold the tool applies; reports echo the effective values.
struct Thresholds {
  double exact = 1e-10;          // protocol roundtrips, λ, chain and PVM identities
  double crossed = 1e-12;        // covariance and V-conjugation relations
  double compose = 1e-10;        // composition identities
  double closed_form = 1e-12;    // embezzlement error vs its closed form
  double embezzle_c = 0.378;     // entry deviation ≤ C · err(N)
  double shift_factor = 4.0;     // shift residual ≤ factor · 2^{-D/2}
  double ucp_eps = 1e-8;
  double rank_tol = 1e-8;
  double obstruction_tol = 1e-8;

  Json to_json() const;
};

// Parses args (without the program name), runs the command, writes the report
// to --out (or to `out` when absent) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Json checks_to_json(const CheckList& c);
std::string checks_to_csv(const CheckList& c);

}  // namespace telecode::cli
