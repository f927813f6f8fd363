#include "nsf/thermo/transport.hpp"

namespace nsf::thermo {

void TransportCoeffs::validate() const {
  require(mu_lower > 0.0 && mu_upper >= mu_lower, "transport: invalid viscosity envelope");
  require(eta_bulk > 0.0 && eta_upper >= eta_bulk, "transport: invalid bulk viscosity envelope");
  require(kappa_m_lower > 0.0 && kappa_m_upper >= kappa_m_lower,
          "transport: invalid molecular conductivity envelope");
  require(kappa_r_lower > 0.0 && kappa_r_upper >= kappa_r_lower,
          "transport: invalid radiative conductivity envelope");
}

Scalar conductivity_primitive(const TransportCoeffs& c, Scalar theta) {
  require(theta > 0.0, "conductivity_primitive: temperature must be positive");
  const Scalar t2 = theta * theta;
  // int_1^theta (1+z) dz and int_1^theta (1+z^3) dz
  const Scalar im = theta + 0.5 * t2 - 1.5;
  const Scalar ir = theta + 0.25 * t2 * t2 - 1.25;
  return c.kappa_m_lower * im + c.kappa_r_lower * ir;
}

Mat stress_tensor(const TransportCoeffs& c, Scalar chi_omega, Scalar theta, const Mat& grad,
                  int dim) {
  require(theta > 0.0, "stress_tensor: temperature must be positive");
  const Scalar mu_om = chi_omega * c.mu(theta);
  const Scalar eta_om = chi_omega * c.eta(theta);
  const Scalar div = grad.trace(dim);
  Mat s;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Scalar v = mu_om * (grad(i, j) + grad(j, i));
      if (i == j) v += (eta_om - 2.0 / 3.0 * mu_om) * div;
      s(i, j) = v;
    }
  }
  return s;
}

Scalar viscous_dissipation(const Mat& stress, const Mat& grad, int dim) {
  Scalar acc = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) acc += stress(i, j) * grad(i, j);
  return acc;
}

}  // namespace nsf::thermo
