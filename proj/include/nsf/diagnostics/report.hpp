#pragma once

#include <string>
#include <vector>

#include "nsf/core/types.hpp"

namespace nsf::diagnostics {

// Time series of every monitored quantity, one row per checkpoint. Column
// order is fixed; diagnostics.csv is written from this verbatim, so reruns
// are bit-identical.
struct DiagnosticsReport {
  static const std::vector<std::string>& column_names();

  // per-row columns
  std::vector<Scalar> t;
  std::vector<Scalar> mass;
  std::vector<Scalar> e_kin, e_int, e_art, e_tot;
  std::vector<Scalar> pen_flux, pen_flux_int;
  std::vector<Scalar> entropy_prod, entropy_prod_int;
  std::vector<Scalar> lam_t5_int, lam_t4_int;
  std::vector<Scalar> confinement;
  std::vector<Scalar> diss_lhs, diss_rhs;
  std::vector<Scalar> ebal_lhs, ebal_rhs, ebal_residual;
  std::vector<Scalar> renorm_min1, renorm_frac;
  std::vector<Scalar> sigma_min;
  std::vector<Scalar> norm_rho_beta, norm_sqrho_u, norm_lam_t5, norm_grad_u, norm_aeta_t4,
      norm_rho_53, norm_grad_logt, norm_grad_t32;
  std::vector<Scalar> solid_visc_int, solid_cond_int, solid_rad_int;
  std::vector<Scalar> floor_hits;

  // run-level values
  Scalar mass0 = 0.0;
  Scalar rho_bar = 0.0;
  Scalar e_tot0 = 0.0;
  Scalar sigma_min_global = 0.0;
  Scalar mass_drift_max = 0.0;  // max relative |M - M0|/M0 over rows

  size_t rows() const { return t.size(); }
  std::vector<Scalar> row(size_t i) const;
  void write_csv(const std::string& path) const;
};

}  // namespace nsf::diagnostics
