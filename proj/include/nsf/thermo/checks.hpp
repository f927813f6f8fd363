#pragma once

#include <string>
#include <vector>

#include "nsf/thermo/eos.hpp"
#include "nsf/thermo/transport.hpp"

namespace nsf::thermo {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs every constitutive hypothesis as an executable check: structure
// function conditions, Gibbs compatibility, thermodynamic stability signs,
// coercivity and growth envelopes, transport-coefficient envelopes, primitive
// monotonicity and the temperature-inversion roundtrip. Grids are log-spaced
// over [0.01, 10]^2.
std::vector<CheckResult> run_hypothesis_checks(const EosModel& model,
                                               const TransportCoeffs& coeffs);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace nsf::thermo
