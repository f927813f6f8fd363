#pragma once

#include <cmath>

#include "nsf/core/types.hpp"
#include "nsf/fields/grid.hpp"
#include "nsf/thermo/eos.hpp"
#include "nsf/thermo/transport.hpp"

namespace nsf::solver {

// Manufactured conduction solution for the fixed-box regression harness:
// frozen unit density, zero velocity, and
//   theta(t,x) = 1 + A exp(-t) cos(pi (x - lo)/L),
// which is Neumann-compatible at both walls. The source makes the internal
// energy equation with flux chi nabla K(theta), chi == 1, hold exactly.
struct DiffusionMms {
  Scalar amplitude = 0.2;

  Scalar theta_exact(const fields::Grid& g, Scalar t, const Vec& x) const {
    const Scalar L = g.hi[0] - g.lo[0];
    return 1.0 + amplitude * std::exp(-t) * std::cos(3.14159265358979323846 * (x[0] - g.lo[0]) / L);
  }

  Scalar source(const fields::Grid& g, const thermo::EosModel& eos,
                const thermo::TransportCoeffs& tc, Scalar a_loc, Scalar t, const Vec& x) const {
    const Scalar pi = 3.14159265358979323846;
    const Scalar L = g.hi[0] - g.lo[0];
    const Scalar k = pi / L;
    const Scalar c = amplitude * std::exp(-t) * std::cos(k * (x[0] - g.lo[0]));
    const Scalar th = 1.0 + c;
    const Scalar th_t = -c;
    const Scalar th_x = -amplitude * std::exp(-t) * k * std::sin(k * (x[0] - g.lo[0]));
    const Scalar th_xx = -k * k * c;
    const Scalar cv = thermo::internal_energy_dtheta(eos, 1.0, th, a_loc);
    const Scalar kappa = tc.kappa(th);
    const Scalar dkappa = tc.kappa_m_lower + 3.0 * tc.kappa_r_lower * th * th;
    return cv * th_t - (dkappa * th_x * th_x + kappa * th_xx);
  }
};

}  // namespace nsf::solver
