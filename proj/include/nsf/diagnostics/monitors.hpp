#pragma once

#include <utility>
#include <vector>

#include "nsf/diagnostics/report.hpp"
#include "nsf/fields/grid.hpp"
#include "nsf/fields/state.hpp"
#include "nsf/geometry/moving_domain.hpp"
#include "nsf/solver/stepper.hpp"

namespace nsf::diagnostics {

// Interface flux integral int_{Gamma_t} |(u - V) . n|^2 dS at the state's time.
Scalar penalty_flux(const fields::State& st, const geometry::MovingDomain& domain,
                    const fields::Grid& grid, Scalar rho_vac);

// Entropy production rate (1/theta)(S_omega : grad u + kappa_nu |grad theta|^2
// / theta) per cell, plus its integral over B. Both summands are nonnegative.
std::pair<std::vector<Scalar>, Scalar> entropy_production(const solver::StepSample& s,
                                                          const fields::Grid& grid);

// Mass sitting outside Omega_t, straddling cells weighted by the smeared step.
Scalar confinement_mass(const fields::State& st, const geometry::MovingDomain& domain,
                        const fields::Grid& grid);

// Renormalization library of (2.27)-type compositions.
enum class RenormTag { zero, min1, frac };
Scalar renorm_b(RenormTag tag, Scalar z);
Scalar renorm_big_b(RenormTag tag, Scalar rho);  // B(1) = 0 normalization

// Residual columns of the report for a tag shipped in it.
Scalar renormalized_residual(const DiagnosticsReport& rep, RenormTag tag);

// Per-checkpoint relative defect of the total-energy identity; the run keeps
// the inequality when every entry stays below the tolerance.
std::vector<Scalar> energy_balance_residuals(const DiagnosticsReport& rep);

struct DissipationSummary {
  Scalar lhs_min = 0.0;
  long violations = 0;  // checkpoints with LHS > RHS beyond the tolerance
};
DissipationSummary dissipation_inequality(const DiagnosticsReport& rep, Scalar rel_tol);

// Sup-in-time of each monitored norm, for cross-run comparison.
struct BoundSummary {
  Scalar rho_beta = 0.0, sqrho_u = 0.0, lam_t5 = 0.0, grad_u = 0.0, aeta_t4 = 0.0,
         rho_53 = 0.0, grad_logt = 0.0, grad_t32 = 0.0;
  bool all_finite = false;
};
BoundSummary apriori_bounds(const DiagnosticsReport& rep);

// Step observer that accumulates the time integrals (trapezoid rule, every
// step) and emits checkpoint rows.
class Engine : public solver::StepObserver {
 public:
  Engine(Scalar t_end, int checkpoints);

  void on_init(const solver::Stepper& st) override;
  void on_step(const solver::Stepper& st, Scalar dt) override;

  const DiagnosticsReport& report() const { return rep_; }
  DiagnosticsReport& report() { return rep_; }

 private:
  struct Integrands {
    Scalar pen_flux = 0.0, sigma = 0.0, lam5 = 0.0, lam4 = 0.0, work_v = 0.0, b1 = 0.0,
           b2 = 0.0, solid_visc = 0.0, solid_cond = 0.0, solid_rad = 0.0;
    Scalar sigma_cell_min = 0.0;
  };
  Integrands measure(const solver::Stepper& st);
  void emit_row(const solver::Stepper& st, const Integrands& now);

  Scalar t_end_ = 0.0;
  int checkpoints_ = 1;
  Scalar next_checkpoint_ = 0.0;

  Integrands prev_;
  Scalar acc_pen_ = 0.0, acc_sigma_ = 0.0, acc_lam5_ = 0.0, acc_lam4_ = 0.0, acc_workv_ = 0.0,
         acc_b1_ = 0.0, acc_b2_ = 0.0, acc_svisc_ = 0.0, acc_scond_ = 0.0, acc_srad_ = 0.0;
  Scalar sigma_min_since_row_ = 0.0;

  Scalar rb1_0_ = 0.0, rb2_0_ = 0.0;   // integrals of rho B(rho) at t = 0
  Scalar data0_diss_ = 0.0, data0_ebal_ = 0.0;
  Scalar dh1_drho_ = 0.0;  // d/drho H_1(rho_bar, 1)

  DiagnosticsReport rep_;
};

}  // namespace nsf::diagnostics
