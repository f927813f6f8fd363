#pragma once

#include "nsf/core/types.hpp"

namespace nsf::solver {

// The six-parameter cascade plus the mollification width. All strictly
// positive; beta >= 4 and lambda <= 1 as used by the dissipation bookkeeping.
struct PenaltyParams {
  Scalar epsilon = 1e-3;  // interface flux penalty
  Scalar eta = 1e-2;      // radiation contrast in the solid
  Scalar omega = 1e-2;    // viscosity contrast
  Scalar nu = 1e-2;       // conductivity contrast
  Scalar lambda = 1e-2;   // temperature control sink
  Scalar delta = 1e-3;    // artificial pressure weight
  Scalar beta = 4.0;      // artificial pressure exponent
  Scalar alpha = 0.02;    // mollification width (length)

  void validate() const {
    require(epsilon > 0.0, "penalty: epsilon must be strictly positive");
    require(eta > 0.0 && eta <= 1.0, "penalty: eta must lie in (0,1]");
    require(omega > 0.0 && omega <= 1.0, "penalty: omega must lie in (0,1]");
    require(nu > 0.0 && nu <= 1.0, "penalty: nu must lie in (0,1]");
    require(lambda > 0.0 && lambda <= 1.0, "penalty: lambda must lie in (0,1]");
    require(delta > 0.0, "penalty: delta must be strictly positive");
    require(beta >= 4.0, "penalty: beta must be at least 4");
    require(alpha > 0.0, "penalty: mollification width must be positive");
  }
};

struct SchemeConfig {
  Scalar cfl = 0.4;
  Scalar theta_min = 1e-8;  // temperature floor, applied at the solver interface only
  Scalar rho_vac = 1e-10;   // below this the velocity is the prescribed field
  Scalar rho_dyn = 0.05;    // momentum slaving threshold in the dilute band
  Scalar dt_fixed = 0.0;    // 0 = adaptive from compute_dt
  int checkpoints = 50;     // diagnostic rows over [0, t_end]
  bool penalty_implicit = true;
  bool penalty_enabled = true;
  bool mms_diffusion = false;  // conduction-only manufactured-solution harness

  void validate() const {
    require(cfl > 0.0 && cfl <= 0.9, "scheme: CFL must lie in (0, 0.9]");
    require(theta_min > 0.0, "scheme: temperature floor must be positive");
    require(checkpoints >= 1, "scheme: need at least one checkpoint");
  }
};

}  // namespace nsf::solver
