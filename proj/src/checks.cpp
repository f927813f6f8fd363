#include "nsf/thermo/checks.hpp"

#include <cmath>
#include <cstdio>

namespace nsf::thermo {
namespace {

std::vector<Scalar> log_grid(Scalar lo, Scalar hi, int n) {
  std::vector<Scalar> g(n);
  const Scalar llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return g;
}

std::string fmt(Scalar v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace

std::vector<CheckResult> run_hypothesis_checks(const EosModel& model,
                                               const TransportCoeffs& coeffs) {
  std::vector<CheckResult> out;
  auto add = [&out](const std::string& name, bool pass, const std::string& detail) {
    out.push_back({name, pass, detail});
  };

  const auto grid = log_grid(0.01, 10.0, 25);
  const auto zgrid = log_grid(1e-4, 1e6, 101);

  // Structure function: P(0) = 0, P'(0) > 0, P' > 0, monatomic gap condition.
  {
    const Scalar p0 = model.structure(0.0);
    const Scalar dp0 = model.structure_deriv(1e-12);
    add("structure P(0)=0, P'(0)>0", std::fabs(p0) < 1e-12 && dp0 > 0.0,
        "P(0)=" + fmt(p0) + " P'(0)=" + fmt(dp0));
  }
  {
    bool mono = true, gap = true;
    Scalar gap_c = 0.0;
    for (Scalar z : zgrid) {
      const Scalar dp = model.structure_deriv(z);
      if (dp <= 0.0) mono = false;
      const Scalar g = 5.0 / 3.0 * model.structure(z) - dp * z;
      if (g <= 0.0) gap = false;
      gap_c = std::max(gap_c, g / z);
    }
    add("structure P'(Z)>0 on log grid", mono, "101 samples in [1e-4,1e6]");
    add("structure 0 < 5/3 P - P' Z <= c Z", gap, "c=" + fmt(gap_c));
  }
  {
    const Scalar pinf = model.p_infty();
    add("structure P(Z)/Z^{5/3} -> p_inf > 0", pinf > 0.0, "p_inf=" + fmt(pinf));
  }

  // Gibbs compatibility, finite differences at h = 1e-4.
  {
    Scalar worst = 0.0;
    for (Scalar r : grid)
      for (Scalar t : grid) worst = std::max(worst, gibbs_residual(model, r, t, 1e-4));
    add("gibbs residual <= 1e-6 at h=1e-4", worst <= 1e-6, "max=" + fmt(worst));
  }

  // Thermodynamic stability signs.
  {
    bool dpdr_pos = true;
    bool dedt_ok = true;
    Scalar cmax = 0.0;
    for (Scalar r : grid) {
      for (Scalar t : grid) {
        if (pressure_drho(model, r, t, 0.0) <= 0.0) dpdr_pos = false;
        const Scalar h = 1e-6 * t;
        const Scalar de = (internal_energy(model, r, t + h, 0.0) -
                           internal_energy(model, r, t - h, 0.0)) /
                          (2.0 * h * r);
        if (de <= 0.0) dedt_ok = false;
        cmax = std::max(cmax, de);
      }
    }
    add("stability dp_M/drho > 0", dpdr_pos, "25x25 grid");
    add("stability 0 < de_M/dtheta <= c", dedt_ok, "c=" + fmt(cmax));
  }

  // Coercivity and growth envelopes of the default decomposition.
  {
    bool coercive = true;
    Scalar c_lo = 1e300, c_hi = 0.0, ce = 0.0;
    const Scalar pinf = model.p_infty();
    for (Scalar r : grid) {
      for (Scalar t : grid) {
        const Scalar e = internal_energy(model, r, t, model.a);
        const Scalar t2 = t * t;
        if (e < model.a * t2 * t2 + 1.5 * pinf * std::pow(r, 5.0 / 3.0) - 1e-12) coercive = false;
        const Scalar pm = pressure_molecular(model, r, t);
        const Scalar r53 = std::pow(r, 5.0 / 3.0);
        c_lo = std::min(c_lo, pm / r53);
        c_hi = std::max(c_hi, pm / std::max(std::pow(t, 2.5), r53));
        const Scalar em = 1.5 * pm / r;
        ce = std::max(ce, em / (std::pow(r, 2.0 / 3.0) + t));
      }
    }
    add("coercivity rho e >= a theta^4 + 3/2 p_inf rho^{5/3}", coercive, "pointwise");
    add("pressure envelope c_lo rho^{5/3} <= p_M <= c_hi max(theta^{5/2},rho^{5/3})",
        c_lo > 0.0 && c_hi < 1e300, "c_lo=" + fmt(c_lo) + " c_hi=" + fmt(c_hi));
    add("energy envelope 0 <= e_M <= c (rho^{2/3}+theta)", ce < 1e300, "c=" + fmt(ce));
  }

  // Temperature inversion roundtrip.
  {
    Scalar worst = 0.0;
    for (Scalar r : grid) {
      for (Scalar t : grid) {
        const Scalar e = internal_energy(model, r, t, model.a);
        const Scalar ti = invert_temperature(model, r, e, model.a);
        worst = std::max(worst, std::fabs(ti - t) / t);
      }
    }
    add("invert_temperature roundtrip <= 1e-10", worst <= 1e-10, "max rel=" + fmt(worst));
  }

  // Helmholtz relative form is nonnegative (thermodynamic stability at work).
  {
    const Scalar rbar = 1.0;
    const Scalar hh = 1e-6;
    const Scalar dh = (helmholtz(model, rbar + hh, 1.0, model.a) -
                       helmholtz(model, rbar - hh, 1.0, model.a)) /
                      (2.0 * hh);
    const Scalar h_ref = helmholtz(model, rbar, 1.0, model.a);
    Scalar worst = 0.0;
    const auto g50 = log_grid(0.01, 10.0, 50);
    for (Scalar r : g50)
      for (Scalar t : g50)
        worst = std::min(worst, helmholtz(model, r, t, model.a) - (r - rbar) * dh - h_ref);
    add("helmholtz relative form nonnegative", worst >= -1e-9, "min=" + fmt(worst));
  }

  // Transport envelopes and the conductivity primitive.
  {
    bool mu_ok = true, eta_ok = true, km_ok = true, kr_ok = true, mono = true;
    Scalar prev = -1e300;
    for (Scalar t : log_grid(1e-3, 1e3, 61)) {
      const Scalar band = 1.0 + t;
      const Scalar band3 = 1.0 + t * t * t;
      if (!(coeffs.mu(t) >= coeffs.mu_lower * band - 1e-14 &&
            coeffs.mu(t) <= coeffs.mu_upper * band + 1e-14))
        mu_ok = false;
      if (!(coeffs.eta(t) >= 0.0 && coeffs.eta(t) <= coeffs.eta_upper * band + 1e-14))
        eta_ok = false;
      if (!(coeffs.kappa_m(t) >= coeffs.kappa_m_lower * band - 1e-14 &&
            coeffs.kappa_m(t) <= coeffs.kappa_m_upper * band + 1e-14))
        km_ok = false;
      if (!(coeffs.kappa_r(t) >= coeffs.kappa_r_lower * band3 - 1e-14 &&
            coeffs.kappa_r(t) <= coeffs.kappa_r_upper * band3 + 1e-14))
        kr_ok = false;
      const Scalar k = conductivity_primitive(coeffs, t);
      if (k <= prev) mono = false;
      prev = k;
    }
    add("viscosity envelope mu_lo(1+t) <= mu <= mu_hi(1+t)", mu_ok, "61 samples");
    add("bulk viscosity envelope 0 <= eta <= eta_hi(1+t)", eta_ok, "61 samples");
    add("conductivity envelope kappa_M linear band", km_ok, "61 samples");
    add("conductivity envelope kappa_R cubic band", kr_ok, "61 samples");
    add("conductivity primitive strictly increasing, K(1)=0",
        mono && std::fabs(conductivity_primitive(coeffs, 1.0)) < 1e-14, "");
  }

  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace nsf::thermo
