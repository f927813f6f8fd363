#include "nsf/diagnostics/report.hpp"

#include "nsf/fields/csv.hpp"

namespace nsf::diagnostics {

const std::vector<std::string>& DiagnosticsReport::column_names() {
  static const std::vector<std::string> names = {
      "t",            "mass",          "e_kin",          "e_int",
      "e_art",        "e_tot",         "pen_flux",       "pen_flux_int",
      "entropy_prod", "entropy_prod_int", "lam_t5_int",  "lam_t4_int",
      "confinement",  "diss_lhs",      "diss_rhs",       "ebal_lhs",
      "ebal_rhs",     "ebal_residual", "renorm_min1",    "renorm_frac",
      "sigma_min",    "norm_rho_beta", "norm_sqrho_u",   "norm_lam_t5",
      "norm_grad_u",  "norm_aeta_t4",  "norm_rho_53",    "norm_grad_logt",
      "norm_grad_t32", "solid_visc_int", "solid_cond_int", "solid_rad_int",
      "floor_hits"};
  return names;
}

std::vector<Scalar> DiagnosticsReport::row(size_t i) const {
  return {t[i],
          mass[i],
          e_kin[i],
          e_int[i],
          e_art[i],
          e_tot[i],
          pen_flux[i],
          pen_flux_int[i],
          entropy_prod[i],
          entropy_prod_int[i],
          lam_t5_int[i],
          lam_t4_int[i],
          confinement[i],
          diss_lhs[i],
          diss_rhs[i],
          ebal_lhs[i],
          ebal_rhs[i],
          ebal_residual[i],
          renorm_min1[i],
          renorm_frac[i],
          sigma_min[i],
          norm_rho_beta[i],
          norm_sqrho_u[i],
          norm_lam_t5[i],
          norm_grad_u[i],
          norm_aeta_t4[i],
          norm_rho_53[i],
          norm_grad_logt[i],
          norm_grad_t32[i],
          solid_visc_int[i],
          solid_cond_int[i],
          solid_rad_int[i],
          floor_hits[i]};
}

void DiagnosticsReport::write_csv(const std::string& path) const {
  fields::CsvWriter w;
  w.open(path, column_names());
  for (size_t i = 0; i < rows(); ++i) w.row(row(i));
  w.close();
}

}  // namespace nsf::diagnostics
