#pragma once

#include "nsf/core/types.hpp"

namespace nsf::thermo {

// Viscosity and conductivity laws, taken as the lower envelopes of the
// admissible growth bands: mu = mu_lower (1+theta), eta = eta_bulk (1+theta),
// kappa = kappa_m_lower (1+theta) + kappa_r_lower (1+theta^3). The upper
// constants are kept for the envelope checks.
struct TransportCoeffs {
  Scalar mu_lower = 0.01;
  Scalar mu_upper = 0.02;
  Scalar eta_bulk = 0.005;
  Scalar eta_upper = 0.01;
  Scalar kappa_m_lower = 0.5;
  Scalar kappa_m_upper = 1.0;
  Scalar kappa_r_lower = 0.1;
  Scalar kappa_r_upper = 0.2;

  Scalar mu(Scalar theta) const { return mu_lower * (1.0 + theta); }
  Scalar eta(Scalar theta) const { return eta_bulk * (1.0 + theta); }
  Scalar kappa_m(Scalar theta) const { return kappa_m_lower * (1.0 + theta); }
  Scalar kappa_r(Scalar theta) const {
    return kappa_r_lower * (1.0 + theta * theta * theta);
  }
  Scalar kappa(Scalar theta) const { return kappa_m(theta) + kappa_r(theta); }

  void validate() const;
};

// K(theta) = int_1^theta kappa(z) dz, closed form, K(1) = 0, increasing.
Scalar conductivity_primitive(const TransportCoeffs& c, Scalar theta);

// S_omega = mu_om (G + G^T - 2/3 tr(G) I) + eta_om tr(G) I with
// mu_om = chi_om * mu(theta), eta_om = chi_om * eta(theta). The 2/3 deviatoric
// factor is kept in 1D/2D reductions. grad(i,j) = d_i u_j.
Mat stress_tensor(const TransportCoeffs& c, Scalar chi_omega, Scalar theta, const Mat& grad,
                  int dim);

// S : grad u, a nonnegative quadratic form for chi, mu, eta >= 0.
Scalar viscous_dissipation(const Mat& stress, const Mat& grad, int dim);

}  // namespace nsf::thermo
