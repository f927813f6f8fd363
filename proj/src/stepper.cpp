#include "nsf/solver/stepper.hpp"

#include <cmath>
#include <cstdio>

#include "nsf/core/kernels.hpp"
#include "nsf/fields/ops.hpp"

namespace nsf::solver {
namespace {

Scalar pow_general(Scalar x, Scalar p) {
  const int ip = static_cast<int>(p);
  if (p == static_cast<Scalar>(ip) && ip >= 0 && ip <= 8) {
    Scalar r = 1.0;
    for (int k = 0; k < ip; ++k) r *= x;
    return r;
  }
  return std::pow(x, p);
}

// Upwind face fluxes of q along one axis; F[i] belongs to the face between
// cell i and its axis-neighbor. Wall faces are zeroed, which also squashes
// the row-wrap artifacts of the bulk kernel pass.
void axis_upwind_flux(const std::vector<Scalar>& ua, const std::vector<Scalar>& q,
                      const fields::Grid& g, int axis, std::vector<Scalar>& F) {
  const size_t n = g.cells();
  const size_t s = axis == 0 ? 1 : static_cast<size_t>(g.n[0]);
  F.resize(n);
  if (n > s)
    kernels::active().upwind_flux(F.data(), ua.data(), ua.data() + s, q.data(), q.data() + s,
                                  n - s);
  if (axis == 0) {
    for (int iy = 0; iy < g.n[1]; ++iy) F[g.idx(g.n[0] - 1, iy)] = 0.0;
  } else {
    for (int ix = 0; ix < g.n[0]; ++ix) F[g.idx(ix, g.n[1] - 1)] = 0.0;
  }
}

// q[i] += c * (F[i-s] - F[i]); faces below the first slab count as zero.
void axis_apply_flux(std::vector<Scalar>& q, const std::vector<Scalar>& F,
                     const fields::Grid& g, int axis, Scalar c) {
  const size_t n = g.cells();
  const size_t s = axis == 0 ? 1 : static_cast<size_t>(g.n[0]);
  if (n > s) kernels::active().add_scaled_diff(q.data() + s, F.data(), F.data() + s, c, n - s);
  for (size_t i = 0; i < s; ++i) q[i] += c * (0.0 - F[i]);
}

// Solves internal_energy(rho, theta, a_loc) + w5 * theta^5 = E for theta.
// Monotone and convex; Newton lands above the root after one step and then
// descends. Generic structure functions fall back to bisection.
Scalar sink_solve(const thermo::EosModel& eos, Scalar rho, Scalar a_loc, Scalar E, Scalar w5,
                  Scalar seed) {
  const Scalar floor = thermo::cold_floor(eos, rho);
  Scalar et = E - floor;
  if (et <= 0.0) et = 0.0;
  if (et == 0.0) return 0.0;

  if (eos.is_default()) {
    Scalar hi = 1e300;
    if (rho > 0.0) hi = et / (1.5 * rho);
    if (a_loc > 0.0) hi = std::min(hi, std::sqrt(std::sqrt(et / a_loc)));
    if (w5 > 0.0) hi = std::min(hi, std::pow(et / w5, 0.2));
    Scalar th = (seed > 0.0 && seed < hi) ? seed : hi;
    for (int it = 0; it < 100; ++it) {
      const Scalar t2 = th * th;
      const Scalar t4 = t2 * t2;
      const Scalar f = 1.5 * rho * th + a_loc * t4 + w5 * t4 * th - et;
      const Scalar df = 1.5 * rho + 4.0 * a_loc * th * t2 + 5.0 * w5 * t4;
      const Scalar step = f / df;
      th -= step;
      if (th <= 0.0) th = 0.5 * (th + step);
      if (std::fabs(step) <= 1e-13 * th) break;
    }
    return th;
  }

  Scalar lo = 0.0, hi = 1.0;
  auto f = [&](Scalar th) {
    return thermo::internal_energy(eos, rho, th, a_loc) - floor + w5 * pow_general(th, 5.0) - et;
  };
  while (f(hi) < 0.0 && hi < 1e14) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const Scalar mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-13 * hi) break;
  }
  return 0.5 * (lo + hi);
}

thread_local std::vector<Scalar> tl_flux, tl_force, tl_tmp, tl_qold[3];

}  // namespace

void RunSetup::validate() const {
  require(grid.dim == domain.dim, "setup: grid and domain dimensions differ");
  pen.validate();
  scheme.validate();
  coeffs.validate();
  require(eos.a > 0.0, "setup: radiation constant must be positive");
  require(eos.beta == pen.beta, "setup: eos and penalty beta inconsistent");
  require(pen.alpha >= grid.h, "setup: mollification width below grid spacing");
  domain.validate();
  if (scheme.mms_diffusion) {
    require(pen.eta == 1.0 && pen.omega == 1.0 && pen.nu == 1.0,
            "setup: the diffusion harness needs unit coefficient contrasts");
    require(domain.velocity.kind == geometry::VelocityKind::zero,
            "setup: the diffusion harness needs a stationary domain");
  }

  // Compact support of V with >= 4h margin at the walls, sampled over the
  // unit time range, and div V = 0 on a 4h tube around Gamma_t.
  const Scalar probe_times[] = {0.0, 0.11, 0.29, 0.5, 0.77, 1.0};
  const Scalar tube = 4.0 * grid.h;
  for (Scalar t : probe_times) {
    for (size_t i = 0; i < grid.cells(); ++i) {
      const Vec x = grid.center(i);
      bool near_wall = false;
      for (int a = 0; a < grid.dim; ++a)
        near_wall = near_wall || x[a] - grid.lo[a] < tube || grid.hi[a] - x[a] < tube;
      if (near_wall) {
        const Vec v = domain.velocity.eval(t, x);
        require(std::fabs(v[0]) + std::fabs(v[1]) < 1e-13,
                "setup: prescribed field not supported 4h inside the box");
      }
      if (std::fabs(domain.signed_distance(t, x)) <= tube) {
        // centered finite differences of the analytic field
        Scalar div = 0.0;
        for (int a = 0; a < grid.dim; ++a) {
          Vec xp = x, xm = x;
          xp[a] += 0.5 * grid.h;
          xm[a] -= 0.5 * grid.h;
          div += (domain.velocity.eval(t, xp)[a] - domain.velocity.eval(t, xm)[a]) / grid.h;
        }
        require(std::fabs(div) < 1e-9, "setup: div V does not vanish near Gamma_t");
      }
    }
  }
}

void continuity_update(std::vector<Scalar>& rho, const StepSample& s, const fields::Grid& g,
                       Scalar dt, Bc bc) {
  require(dt > 0.0, "continuity: dt must be positive");
  const Scalar c = dt / g.h;
  if (bc == Bc::periodic) {
    require(g.dim == 1, "continuity: periodic harness is 1D only");
    const size_t n = g.cells();
    std::vector<Scalar>& F = tl_flux;
    F.resize(n);
    for (size_t i = 0; i < n; ++i) {
      const size_t j = (i + 1) % n;
      const Scalar ubar = 0.5 * (s.u[0][i] + s.u[0][j]);
      F[i] = ubar >= 0.0 ? ubar * rho[i] : ubar * rho[j];
    }
    std::vector<Scalar> old = rho;
    for (size_t i = 0; i < n; ++i) {
      const size_t im = (i + n - 1) % n;
      rho[i] = old[i] + c * (F[im] - F[i]);
    }
  } else {
    for (int a = 0; a < g.dim; ++a) {
      axis_upwind_flux(s.u[a], rho, g, a, tl_flux);
      axis_apply_flux(rho, tl_flux, g, a, c);
    }
  }
  for (size_t i = 0; i < rho.size(); ++i) {
    if (rho[i] < 0.0) {
      if (rho[i] > -1e-14) {
        rho[i] = 0.0;
      } else {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "continuity: negative density %.3e at cell %zu (CFL)",
                      rho[i], i);
        throw Error(buf);
      }
    }
  }
}

void momentum_update(fields::State& st, const std::vector<Scalar>& rho_old, const StepSample& s,
                     const RunSetup& r, Scalar dt) {
  (void)rho_old;
  const fields::Grid& g = r.grid;
  const size_t n = g.cells();
  const Scalar c = dt / g.h;

  for (int comp = 0; comp < g.dim; ++comp) tl_qold[comp] = st.mom[comp];

  for (int comp = 0; comp < g.dim; ++comp) {
    std::vector<Scalar>& m = st.mom[comp];
    // upwind convection of momentum
    for (int a = 0; a < g.dim; ++a) {
      axis_upwind_flux(s.u[a], tl_qold[comp], g, a, tl_flux);
      axis_apply_flux(m, tl_flux, g, a, c);
    }
    // pressure gradient
    fields::derivative(s.press, g, comp, fields::Ghost::mirror, tl_force);
    kernels::active().axpy(m.data(), -dt, tl_force.data(), n);
    // viscous stress divergence
    for (int a = 0; a < g.dim; ++a) {
      fields::derivative(s.stress[a][comp], g, a, fields::Ghost::mirror, tl_force);
      kernels::active().axpy(m.data(), dt, tl_force.data(), n);
    }
  }

  // Interface penalty (pointwise, delta form so u == V is a fixed point
  // bitwise) and dilute-band slaving towards the prescribed field.
  const Scalar inv_eps = 1.0 / r.pen.epsilon;
  const bool pen_on = r.scheme.penalty_enabled;
  const bool implicit = r.scheme.penalty_implicit;
  for (size_t i = 0; i < n; ++i) {
    const Scalar rho_n = st.rho[i];
    if (rho_n <= r.scheme.rho_vac) {
      for (int cpt = 0; cpt < g.dim; ++cpt) st.mom[cpt][i] = rho_n * s.vel[cpt][i];
      continue;
    }
    if (pen_on && s.iq.delta_w[i] > 0.0) {
      const Scalar w = dt * s.iq.delta_w[i] * inv_eps;
      const Scalar coef = implicit ? w / (1.0 + w) : w;
      Scalar mis = 0.0;
      for (int cpt = 0; cpt < g.dim; ++cpt)
        mis += (st.mom[cpt][i] / rho_n - s.vel[cpt][i]) * s.iq.normal[cpt][i];
      for (int cpt = 0; cpt < g.dim; ++cpt)
        st.mom[cpt][i] -= rho_n * coef * mis * s.iq.normal[cpt][i];
    }
    if (rho_n < r.scheme.rho_dyn) {
      const Scalar keep = rho_n / r.scheme.rho_dyn;
      for (int cpt = 0; cpt < g.dim; ++cpt)
        st.mom[cpt][i] = keep * st.mom[cpt][i] + (1.0 - keep) * rho_n * s.vel[cpt][i];
    }
    for (int cpt = 0; cpt < g.dim; ++cpt) {
      if (!std::isfinite(st.mom[cpt][i])) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "momentum: non-finite value at cell %zu (t=%.6g)", i,
                      s.t);
        throw Error(buf);
      }
    }
  }
}

void energy_update(fields::State& st, const std::vector<Scalar>& rho_old, const StepSample& s,
                   const RunSetup& r, Scalar dt, std::vector<Scalar>& theta_out,
                   long& floor_hits) {
  (void)rho_old;
  const fields::Grid& g = r.grid;
  const size_t n = g.cells();
  const Scalar c = dt / g.h;
  std::vector<Scalar>& q = st.rho_e;
  tl_qold[0] = q;

  if (!r.scheme.mms_diffusion) {
    for (int a = 0; a < g.dim; ++a) {
      axis_upwind_flux(s.u[a], tl_qold[0], g, a, tl_flux);
      axis_apply_flux(q, tl_flux, g, a, c);
    }
  }

  // conductive flux chi_nu grad K(theta), conservative face form
  for (int a = 0; a < g.dim; ++a) {
    const size_t stride = a == 0 ? 1 : static_cast<size_t>(g.n[0]);
    tl_flux.resize(n);
    if (n > stride)
      kernels::active().diff_flux(tl_flux.data(), s.cond_coef.data(),
                                  s.cond_coef.data() + stride, s.kprim.data(),
                                  s.kprim.data() + stride, 1.0 / g.h, n - stride);
    if (a == 0) {
      for (int iy = 0; iy < g.n[1]; ++iy) tl_flux[g.idx(g.n[0] - 1, iy)] = 0.0;
    } else {
      for (int ix = 0; ix < g.n[0]; ++ix) tl_flux[g.idx(ix, g.n[1] - 1)] = 0.0;
    }
    axis_apply_flux(q, tl_flux, g, a, -c);
  }

  // dissipation heating and pressure work
  if (!r.scheme.mms_diffusion) {
    for (size_t i = 0; i < n; ++i) q[i] += dt * (s.visc_diss[i] - s.press[i] * s.divu[i]);
  } else {
    for (size_t i = 0; i < n; ++i)
      q[i] += dt * r.mms.source(g, r.eos, r.coeffs, s.a_loc[i], s.t, g.center(i));
  }

  // implicit lambda theta^5 sink; keeps theta positive for any dt
  theta_out.resize(n);
  const Scalar w5 = r.scheme.mms_diffusion ? 0.0 : dt * r.pen.lambda;
  for (size_t i = 0; i < n; ++i) {
    const Scalar rho_n = st.rho[i];
    const Scalar al = s.a_loc[i];
    const Scalar floor = thermo::cold_floor(r.eos, rho_n);
    const Scalar scale = std::max({std::fabs(q[i]), floor, 1.0});
    if (q[i] < floor - 1e-9 * scale) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "energy: rho_e %.6e below the cold floor %.6e at cell %zu (t=%.6g)", q[i],
                    floor, i, s.t);
      throw Error(buf);
    }
    const Scalar e_min = thermo::internal_energy(r.eos, rho_n, r.scheme.theta_min, al);
    if (q[i] < e_min) {
      q[i] = e_min;
      ++floor_hits;
      theta_out[i] = r.scheme.theta_min;
      continue;
    }
    Scalar th = sink_solve(r.eos, rho_n, al, q[i], w5, s.theta[i]);
    if (w5 > 0.0) {
      const Scalar t2 = th * th;
      q[i] -= w5 * t2 * t2 * th;
    }
    if (th < r.scheme.theta_min) {
      th = r.scheme.theta_min;
      q[i] = e_min;
      ++floor_hits;
    }
    theta_out[i] = th;
  }
}

Scalar compute_dt(const fields::State& st, const StepSample& s, const RunSetup& r) {
  const fields::Grid& g = r.grid;
  const size_t n = g.cells();
  Scalar adv_max = 0.0;
  Scalar diff_max = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const Scalar rho = st.rho[i];
    const Scalar th = s.theta[i];
    // conduction diffusivity, well defined since a_loc > 0 everywhere
    const Scalar heat_cap = thermo::internal_energy_dtheta(r.eos, rho, th, s.a_loc[i]);
    Scalar dcell = s.cond_coef[i] / heat_cap;
    if (rho > r.scheme.rho_vac) {
      Scalar speed = 0.0;
      for (int a = 0; a < g.dim; ++a) speed += std::fabs(s.u[a][i]);
      const Scalar cs2 = thermo::pressure_drho(r.eos, rho, th, r.pen.delta);
      adv_max = std::max(adv_max, speed + std::sqrt(cs2));
      // viscous response is slaved below rho_dyn, so the density in the
      // denominator saturates there
      const Scalar mu_om = s.chi_omega[i] * r.coeffs.mu(th);
      const Scalar eta_om = s.chi_omega[i] * r.coeffs.eta(th);
      const Scalar dvisc = (2.0 * mu_om + eta_om) / std::max(rho, r.scheme.rho_dyn);
      dcell = std::max(dcell, dvisc);
    }
    diff_max = std::max(diff_max, dcell);
  }
  Scalar dt = 1e300;
  if (adv_max > 0.0) dt = std::min(dt, g.h / adv_max);
  if (diff_max > 0.0) dt = std::min(dt, g.h * g.h / (2.0 * g.dim * diff_max));
  dt *= r.scheme.cfl;
  require(dt > 1e-14, "compute_dt: step collapsed below 1e-14 (stiffness blow-up)");
  return dt;
}

// ---------------------------------------------------------------------------

struct SampleBuilder {
  static void build_taper(Stepper& st) {
    const fields::Grid& g = st.setup_.grid;
    const geometry::VelocityFieldSpec& vf = st.setup_.domain.velocity;
    const size_t n = g.cells();
    st.taper_w_.resize(n);
    st.taper_g_[0].resize(n);
    st.taper_g_[1].resize(n);
    for (size_t i = 0; i < n; ++i) {
      const Vec x = g.center(i);
      const Vec tg = vf.taper_gradient(x);
      st.taper_w_[i] = vf.taper_value(x);
      st.taper_g_[0][i] = tg[0];
      st.taper_g_[1][i] = tg[1];
    }
    st.taper_ready_ = true;
  }

  static void run(Stepper& st) {
    const RunSetup& r = st.setup_;
    const fields::Grid& g = r.grid;
    const size_t n = g.cells();
    StepSample& s = st.sample_;
    s.t = st.state_.t;

    geometry::sample_interface_into(r.domain, s.t, g, s.iq);

    s.chi_omega.resize(n);
    s.chi_nu.resize(n);
    s.chi_eta.resize(n);
    s.a_loc.resize(n);
    for (size_t i = 0; i < n; ++i) {
      const Scalar phi = s.iq.phi[i];
      s.chi_omega[i] = geometry::mollifier_profile(phi, r.pen.omega, r.pen.alpha);
      s.chi_nu[i] = geometry::mollifier_profile(phi, r.pen.nu, r.pen.alpha);
      s.chi_eta[i] = geometry::mollifier_profile(phi, r.pen.eta, r.pen.alpha);
      s.a_loc[i] = s.chi_eta[i] * r.eos.a;
    }

    // prescribed field
    const geometry::VelocityFieldSpec& vf = r.domain.velocity;
    for (int a = 0; a < 2; ++a) {
      s.vel[a].assign(n, 0.0);
      s.dvdt[a].assign(n, 0.0);
      for (int b = 0; b < 2; ++b) s.gradv[a][b].assign(n, 0.0);
    }
    s.divv.assign(n, 0.0);
    if (vf.kind == geometry::VelocityKind::rotation) {
      for (size_t i = 0; i < n; ++i) {
        const Vec x = g.center(i);
        const Vec v = vf.eval(s.t, x);
        const Mat gr = vf.gradient(s.t, x);
        for (int a = 0; a < g.dim; ++a) {
          s.vel[a][i] = v[a];
          for (int b = 0; b < g.dim; ++b) s.gradv[a][b][i] = gr(a, b);
        }
        s.divv[i] = gr.trace(g.dim);
      }
    } else if (vf.kind != geometry::VelocityKind::zero) {
      if (!st.taper_ready_) build_taper(st);
      Vec v, dv;
      if (vf.kind == geometry::VelocityKind::constant) {
        v = vf.amplitude;
      } else {
        v = vf.amplitude * (vf.rate * std::cos(vf.rate * s.t));
        dv = vf.amplitude * (-vf.rate * vf.rate * std::sin(vf.rate * s.t));
      }
      for (size_t i = 0; i < n; ++i) {
        const Scalar w = st.taper_w_[i];
        Scalar div = 0.0;
        for (int a = 0; a < g.dim; ++a) {
          s.vel[a][i] = v[a] * w;
          s.dvdt[a][i] = dv[a] * w;
          for (int b = 0; b < g.dim; ++b) s.gradv[a][b][i] = st.taper_g_[a][i] * v[b];
          div += st.taper_g_[a][i] * v[a];
        }
        s.divv[i] = div;
      }
    }

    // temperature (seeded inversion), blended velocity, pressure, transport
    s.theta.resize(n);
    s.press.resize(n);
    s.cond_coef.resize(n);
    s.kprim.resize(n);
    for (int a = 0; a < 2; ++a) s.u[a].assign(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      const Scalar rho = st.state_.rho[i];
      const Scalar seed = st.theta_seed_.empty() ? -1.0 : st.theta_seed_[i];
      Scalar th = thermo::invert_temperature(r.eos, rho, st.state_.rho_e[i], s.a_loc[i], seed);
      if (th < r.scheme.theta_min) th = r.scheme.theta_min;
      s.theta[i] = th;
      for (int a = 0; a < g.dim; ++a)
        s.u[a][i] = rho > r.scheme.rho_vac ? st.state_.mom[a][i] / rho : s.vel[a][i];
      s.press[i] =
          thermo::pressure(r.eos, rho, th, s.a_loc[i], r.scheme.mms_diffusion ? 0.0 : r.pen.delta);
      s.cond_coef[i] = s.chi_nu[i] * r.coeffs.kappa(th);
      s.kprim[i] = thermo::conductivity_primitive(r.coeffs, th);
    }

    // gradients and stress
    for (int a2 = 0; a2 < g.dim; ++a2) {
      for (int c2 = 0; c2 < g.dim; ++c2)
        fields::derivative(s.u[c2], g, a2, fields::Ghost::negate, s.gradu[a2][c2]);
      fields::derivative(s.theta, g, a2, fields::Ghost::mirror, s.gradth[a2]);
    }
    s.divu.resize(n);
    s.visc_diss.resize(n);
    for (int a2 = 0; a2 < 2; ++a2)
      for (int c2 = 0; c2 < 2; ++c2)
        if (s.gradu[a2][c2].size() != n) s.gradu[a2][c2].assign(n, 0.0);
    if (s.gradth[1].size() != n) s.gradth[1].assign(n, 0.0);

    for (int a2 = 0; a2 < g.dim; ++a2)
      for (int c2 = 0; c2 < g.dim; ++c2) s.stress[a2][c2].resize(n);
    for (size_t i = 0; i < n; ++i) {
      Mat gu;
      for (int a2 = 0; a2 < g.dim; ++a2)
        for (int c2 = 0; c2 < g.dim; ++c2) gu(a2, c2) = s.gradu[a2][c2][i];
      const Mat sig = thermo::stress_tensor(r.coeffs, s.chi_omega[i], s.theta[i], gu, g.dim);
      for (int a2 = 0; a2 < g.dim; ++a2)
        for (int c2 = 0; c2 < g.dim; ++c2) s.stress[a2][c2][i] = sig(a2, c2);
      s.divu[i] = gu.trace(g.dim);
      s.visc_diss[i] = thermo::viscous_dissipation(sig, gu, g.dim);
    }
  }
};

Stepper::Stepper(const RunSetup& setup, fields::State initial)
    : setup_(setup), state_(std::move(initial)) {
  setup_.validate();
  require(state_.rho.size() == setup_.grid.cells(), "stepper: state does not match the grid");
  resample();
}

void Stepper::resample() { SampleBuilder::run(*this); }

Scalar Stepper::next_dt() const {
  if (setup_.scheme.dt_fixed > 0.0) return setup_.scheme.dt_fixed;
  return compute_dt(state_, sample_, setup_);
}

void Stepper::step(Scalar dt) {
  require(dt > 0.0, "step: dt must be positive");
  rho_old_ = state_.rho;
  if (!setup_.scheme.mms_diffusion) {
    continuity_update(state_.rho, sample_, setup_.grid, dt);
    momentum_update(state_, rho_old_, sample_, setup_, dt);
  }
  energy_update(state_, rho_old_, sample_, setup_, dt, theta_seed_, floor_hits_);
  state_.t += dt;
  ++steps_;
  resample();
}

void advance(Stepper& stepper, Scalar t_end, StepObserver* observer) {
  require(t_end >= stepper.state().t, "advance: t_end before current time");
  if (observer) observer->on_init(stepper);
  const Scalar t0 = stepper.state().t;
  while (stepper.state().t < t_end - 1e-14 * (1.0 + std::fabs(t_end - t0))) {
    Scalar dt = stepper.next_dt();
    dt = std::min(dt, t_end - stepper.state().t);
    stepper.step(dt);
    if (observer) observer->on_step(stepper, dt);
  }
}

fields::State initial_data(const RunSetup& r, Scalar rho_fluid, Scalar theta0, Scalar* E0_out) {
  require(rho_fluid > 0.0, "initial_data: fluid density must be positive");
  require(theta0 > 0.0, "initial_data: initial temperature must be positive");
  const fields::Grid& g = r.grid;
  fields::State st;
  st.resize(g);
  st.t = 0.0;

  // containment: the initial interface must stay clear of the walls
  for (size_t i = 0; i < g.cells(); ++i) {
    const Vec x = g.center(i);
    bool near_wall = false;
    for (int a = 0; a < g.dim; ++a)
      near_wall = near_wall || x[a] - g.lo[a] < 2.0 * g.h || g.hi[a] - x[a] < 2.0 * g.h;
    if (near_wall)
      require(r.domain.signed_distance(0.0, x) > 0.0,
              "initial_data: Omega_0 touches the box boundary");
  }

  Scalar e0 = 0.0;
  const Scalar vol = g.cell_volume();
  for (size_t i = 0; i < g.cells(); ++i) {
    const Vec x = g.center(i);
    const Scalar phi = r.domain.signed_distance(0.0, x);
    const Scalar a_loc = geometry::mollifier_profile(phi, r.pen.eta, r.pen.alpha) * r.eos.a;
    const Scalar rho = phi < 0.0 ? rho_fluid : 0.0;
    st.rho[i] = rho;
    st.rho_e[i] = thermo::internal_energy(r.eos, rho, theta0, a_loc);
    e0 += (st.rho_e[i] + r.pen.delta / (r.pen.beta - 1.0) * pow_general(rho, r.pen.beta)) * vol;
  }
  if (E0_out) *E0_out = e0;
  return st;
}

fields::State initial_data_mms(const RunSetup& r) {
  const fields::Grid& g = r.grid;
  require(g.dim == 1, "mms: the diffusion harness is one-dimensional");
  fields::State st;
  st.resize(g);
  st.t = 0.0;
  for (size_t i = 0; i < g.cells(); ++i) {
    const Vec x = g.center(i);
    const Scalar th = r.mms.theta_exact(g, 0.0, x);
    st.rho[i] = 1.0;
    st.rho_e[i] = thermo::internal_energy(r.eos, 1.0, th, r.eos.a);
  }
  return st;
}

}  // namespace nsf::solver
