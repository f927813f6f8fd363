#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nsf/core/types.hpp"

namespace nsf::thermo {

// Molecular equation of state built from a structure function P:
//   p_M = theta^{5/2} P(Z),  Z = rho / theta^{3/2},
// with the monatomic relation rho*e_M = (3/2) theta^{5/2} P(Z) adopted
// globally and s_M fixed by the Gibbs relation up to s_M(1,1) = 0. The
// default P(Z) = Z + Z^{5/3} admits closed forms for everything:
//   p_M = rho*theta + rho^{5/3},  e_M = (3/2)(theta + rho^{2/3}),
//   s_M = (3/2) log theta - log rho,  p_infty = 1.
// Radiative parts use a local coefficient a_loc (the indicator-scaled
// radiation constant) supplied per call. The artificial pressure
// delta * rho^beta has no energy/entropy counterpart.
struct EosModel {
  Scalar a = 1.0;       // radiation constant (a > 0)
  Scalar beta = 4.0;    // artificial pressure exponent (beta >= 4)
  Scalar z_low = 0.5;   // informational thresholds Z_ below Z^
  Scalar z_high = 2.0;

  // Empty for the default structure function.
  std::function<Scalar(Scalar)> user_p;
  std::function<Scalar(Scalar)> user_dp;  // optional; finite differences if absent

  bool is_default() const { return !user_p; }

  Scalar structure(Scalar z) const;
  Scalar structure_deriv(Scalar z) const;
  Scalar p_infty() const;
};

Scalar pressure_molecular(const EosModel& m, Scalar rho, Scalar theta);
// p = p_M + (a_loc/3) theta^4 + delta rho^beta; rejects theta <= 0.
Scalar pressure(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc, Scalar delta);
// d p / d rho at fixed theta (molecular + artificial part).
Scalar pressure_drho(const EosModel& m, Scalar rho, Scalar theta, Scalar delta);

// Energy density rho*e = rho*e_M + a_loc theta^4; total in rho >= 0.
Scalar internal_energy(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc);
// d(rho e)/d theta at fixed rho (heat capacity of the cell).
Scalar internal_energy_dtheta(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc);
// rho e at theta -> 0+: (3/2) p_infty rho^{5/3}.
Scalar cold_floor(const EosModel& m, Scalar rho);

// Entropy density rho*s; rejects rho <= 0 or theta <= 0 (log singularity).
Scalar entropy(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc);
// Continuous extension used by field loops: radiative part only at rho = 0.
Scalar entropy_density(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc);

// H_1 = rho*(e - s), the Helmholtz functional at unit reference temperature.
Scalar helmholtz(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc);

// Max of the two Gibbs-relation defects, centered finite differences with
// step h in both arguments (radiative parts included with a_loc = a).
Scalar gibbs_residual(const EosModel& m, Scalar rho, Scalar theta, Scalar h);

// Same defect for an arbitrary (p, e, s) triple of specific quantities;
// lets tests corrupt one leg and watch the detector fire.
Scalar gibbs_residual_of(const std::function<Scalar(Scalar, Scalar)>& p,
                         const std::function<Scalar(Scalar, Scalar)>& e,
                         const std::function<Scalar(Scalar, Scalar)>& s, Scalar rho,
                         Scalar theta, Scalar h);

// Unique theta with internal_energy(rho, theta, a_loc) = E, bracketed Newton
// to 1e-13 relative. Signals if E is below the cold floor, or if rho = 0 with
// a_loc = 0 (temperature undetermined). seed < 0 means "no hint".
Scalar invert_temperature(const EosModel& m, Scalar rho, Scalar E, Scalar a_loc,
                          Scalar seed = -1.0);

}  // namespace nsf::thermo
