#pragma once

#include <vector>

#include "nsf/core/types.hpp"
#include "nsf/fields/grid.hpp"
#include "nsf/fields/state.hpp"
#include "nsf/geometry/indicator.hpp"
#include "nsf/geometry/moving_domain.hpp"
#include "nsf/solver/mms.hpp"
#include "nsf/solver/params.hpp"
#include "nsf/thermo/eos.hpp"
#include "nsf/thermo/transport.hpp"

namespace nsf::solver {

// Everything held fixed over one run.
struct RunSetup {
  fields::Grid grid;
  geometry::MovingDomain domain;
  thermo::EosModel eos;
  thermo::TransportCoeffs coeffs;
  PenaltyParams pen;
  SchemeConfig scheme;
  DiffusionMms mms;

  void validate() const;
};

// Per-time-level sampled fields: interface quadrature, coefficient
// indicators, the prescribed field and its derivatives, blended velocity,
// temperature, pressure, velocity/temperature gradients, and the viscous
// stress with its dissipation. Shared by the sub-steps and the diagnostics.
struct StepSample {
  Scalar t = 0.0;
  geometry::InterfaceQuadrature iq;
  std::vector<Scalar> chi_omega, chi_nu, chi_eta;
  std::vector<Scalar> vel[2], dvdt[2];
  std::vector<Scalar> gradv[2][2];  // gradv[i][j] = d_i V_j
  std::vector<Scalar> divv;
  std::vector<Scalar> u[2];
  std::vector<Scalar> theta;
  std::vector<Scalar> a_loc;
  std::vector<Scalar> press;
  std::vector<Scalar> cond_coef;  // chi_nu * kappa(theta)
  std::vector<Scalar> kprim;      // K(theta)
  std::vector<Scalar> gradu[2][2];
  std::vector<Scalar> stress[2][2];
  std::vector<Scalar> visc_diss;  // S_omega : grad u per cell
  std::vector<Scalar> gradth[2];
  std::vector<Scalar> divu;
};

enum class Bc { wall, periodic };  // periodic exists for transport tests only

// First-order upwind conservative continuity update (in place).
void continuity_update(std::vector<Scalar>& rho, const StepSample& s, const fields::Grid& g,
                       Scalar dt, Bc bc = Bc::wall);

// Momentum update: upwind convection, pressure gradient, viscous stress
// divergence, pointwise-implicit interface penalty, dilute-band slaving.
void momentum_update(fields::State& st, const std::vector<Scalar>& rho_old,
                     const StepSample& s, const RunSetup& r, Scalar dt);

// Internal-energy update: upwind convection, conductive flux, dissipation and
// pressure-work sources, implicit lambda theta^5 sink. Returns the post-sink
// temperature in theta_out (used to seed the next inversion) and counts
// temperature-floor lifts.
void energy_update(fields::State& st, const std::vector<Scalar>& rho_old, const StepSample& s,
                   const RunSetup& r, Scalar dt, std::vector<Scalar>& theta_out,
                   long& floor_hits);

// CFL time step: advective h/(|u|+c_s) plus diffusive h^2/(2 d D_max) bounds.
Scalar compute_dt(const fields::State& st, const StepSample& s, const RunSetup& r);

class Stepper {
 public:
  Stepper(const RunSetup& setup, fields::State initial);

  const fields::State& state() const { return state_; }
  const StepSample& sample() const { return sample_; }
  const RunSetup& setup() const { return setup_; }

  Scalar next_dt() const;
  void step(Scalar dt);
  long steps_taken() const { return steps_; }
  long floor_hits() const { return floor_hits_; }

 private:
  void resample();

  RunSetup setup_;
  fields::State state_;
  StepSample sample_;
  std::vector<Scalar> theta_seed_;
  std::vector<Scalar> rho_old_;
  long steps_ = 0;
  long floor_hits_ = 0;

  // prescribed-field cache (taper profile is time independent)
  std::vector<Scalar> taper_w_, taper_g_[2];
  bool taper_ready_ = false;
  friend struct SampleBuilder;
};

struct StepObserver {
  virtual ~StepObserver() = default;
  virtual void on_init(const Stepper&) {}
  virtual void on_step(const Stepper&, Scalar dt) {}
};

// Drives steps until t_end; deterministic for a given setup.
void advance(Stepper& stepper, Scalar t_end, StepObserver* observer = nullptr);

// rho = rho_fluid inside Omega_0 and zero outside, momentum zero, uniform
// initial temperature over all of B (radiative energy uses the local
// mollified coefficient). E0_out receives the directly accumulated total
// energy including the artificial-pressure part.
fields::State initial_data(const RunSetup& r, Scalar rho_fluid, Scalar theta0,
                           Scalar* E0_out = nullptr);

// Frozen-density state for the conduction regression harness.
fields::State initial_data_mms(const RunSetup& r);

}  // namespace nsf::solver
