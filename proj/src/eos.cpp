#include "nsf/thermo/eos.hpp"

#include <cmath>

namespace nsf::thermo {
namespace {

Scalar pow23(Scalar x) { return std::cbrt(x * x); }
Scalar pow53(Scalar x) { return x * pow23(x); }

// Entropy structure integral for a user P:
//   S(Z) = -3/2 int_1^Z (5/3 P(y) - P'(y) y) / y^2 dy,  s_M = S(Z).
// Adaptive Simpson; only hit on the generic path.
Scalar simpson(const std::function<Scalar(Scalar)>& f, Scalar a, Scalar b, int depth,
               Scalar fa, Scalar fm, Scalar fb, Scalar whole) {
  const Scalar m = 0.5 * (a + b);
  const Scalar lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const Scalar flm = f(lm), frm = f(rm);
  const Scalar left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Scalar right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 1e-12 * (1.0 + std::fabs(whole)))
    return left + right;
  return simpson(f, a, m, depth - 1, fa, flm, fm, left) +
         simpson(f, m, b, depth - 1, fm, frm, fb, right);
}

Scalar integrate(const std::function<Scalar(Scalar)>& f, Scalar a, Scalar b) {
  if (a == b) return 0.0;
  const Scalar fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const Scalar whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, 40, fa, fm, fb, whole);
}

}  // namespace

Scalar EosModel::structure(Scalar z) const {
  if (is_default()) return z + pow53(z);
  return user_p(z);
}

Scalar EosModel::structure_deriv(Scalar z) const {
  if (is_default()) return 1.0 + 5.0 / 3.0 * pow23(z);
  if (user_dp) return user_dp(z);
  const Scalar h = 1e-6 * (1.0 + std::fabs(z));
  if (z < h) return (user_p(z + h) - user_p(z)) / h;
  return (user_p(z + h) - user_p(z - h)) / (2.0 * h);
}

Scalar EosModel::p_infty() const {
  if (is_default()) return 1.0;
  const Scalar z = 1e8;
  return user_p(z) / pow53(z);
}

Scalar pressure_molecular(const EosModel& m, Scalar rho, Scalar theta) {
  require(theta > 0.0, "pressure: temperature must be positive");
  require(rho >= 0.0, "pressure: density must be nonnegative");
  if (rho == 0.0) return 0.0;
  if (m.is_default()) return rho * theta + pow53(rho);
  const Scalar t32 = theta * std::sqrt(theta);
  return theta * theta * std::sqrt(theta) * m.structure(rho / t32);
}

Scalar pressure(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc, Scalar delta) {
  const Scalar t2 = theta * theta;
  return pressure_molecular(m, rho, theta) + a_loc / 3.0 * t2 * t2 +
         delta * std::pow(rho, m.beta);
}

Scalar pressure_drho(const EosModel& m, Scalar rho, Scalar theta, Scalar delta) {
  require(theta > 0.0, "pressure_drho: temperature must be positive");
  Scalar dpm;
  if (m.is_default()) {
    dpm = theta + 5.0 / 3.0 * pow23(rho);
  } else {
    const Scalar t32 = theta * std::sqrt(theta);
    dpm = theta * m.structure_deriv(rho / t32);
  }
  Scalar dart = 0.0;
  if (delta > 0.0 && rho > 0.0) dart = delta * m.beta * std::pow(rho, m.beta - 1.0);
  return dpm + dart;
}

Scalar internal_energy(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc) {
  require(theta > 0.0, "internal_energy: temperature must be positive");
  require(rho >= 0.0, "internal_energy: density must be nonnegative");
  const Scalar t2 = theta * theta;
  const Scalar rad = a_loc * t2 * t2;
  if (rho == 0.0) return rad;
  return 1.5 * pressure_molecular(m, rho, theta) + rad;
}

Scalar internal_energy_dtheta(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc) {
  const Scalar rad = 4.0 * a_loc * theta * theta * theta;
  if (rho == 0.0) return rad;
  if (m.is_default()) return 1.5 * rho + rad;
  // d/dtheta [3/2 theta^{5/2} P(Z)] = 9/4 theta^{3/2} (5/3 P(Z) - P'(Z) Z)
  const Scalar t32 = theta * std::sqrt(theta);
  const Scalar z = rho / t32;
  return 2.25 * t32 * (5.0 / 3.0 * m.structure(z) - m.structure_deriv(z) * z) + rad;
}

Scalar cold_floor(const EosModel& m, Scalar rho) { return 1.5 * m.p_infty() * pow53(rho); }

Scalar entropy(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc) {
  require(rho > 0.0, "entropy: density must be positive");
  require(theta > 0.0, "entropy: temperature must be positive");
  return entropy_density(m, rho, theta, a_loc);
}

Scalar entropy_density(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc) {
  require(theta > 0.0, "entropy_density: temperature must be positive");
  const Scalar rad = 4.0 / 3.0 * a_loc * theta * theta * theta;
  if (rho <= 0.0) return rad;
  Scalar s_m;
  if (m.is_default()) {
    s_m = 1.5 * std::log(theta) - std::log(rho);
  } else {
    const Scalar z = rho / (theta * std::sqrt(theta));
    auto integrand = [&m](Scalar y) {
      return -1.5 * (5.0 / 3.0 * m.structure(y) - m.structure_deriv(y) * y) / (y * y);
    };
    s_m = integrate(integrand, 1.0, z);
  }
  return rho * s_m + rad;
}

Scalar helmholtz(const EosModel& m, Scalar rho, Scalar theta, Scalar a_loc) {
  return internal_energy(m, rho, theta, a_loc) - entropy(m, rho, theta, a_loc);
}

Scalar gibbs_residual_of(const std::function<Scalar(Scalar, Scalar)>& p,
                         const std::function<Scalar(Scalar, Scalar)>& e,
                         const std::function<Scalar(Scalar, Scalar)>& s, Scalar rho,
                         Scalar theta, Scalar h) {
  require(h > 0.0 && h < std::min(rho, theta), "gibbs_residual: need 0 < h << min(rho,theta)");
  const Scalar ds_dt = (s(rho, theta + h) - s(rho, theta - h)) / (2.0 * h);
  const Scalar de_dt = (e(rho, theta + h) - e(rho, theta - h)) / (2.0 * h);
  const Scalar ds_dr = (s(rho + h, theta) - s(rho - h, theta)) / (2.0 * h);
  const Scalar de_dr = (e(rho + h, theta) - e(rho - h, theta)) / (2.0 * h);
  const Scalar r1 = std::fabs(theta * ds_dt - de_dt);
  const Scalar r2 = std::fabs(theta * ds_dr - de_dr + p(rho, theta) / (rho * rho));
  return std::max(r1, r2);
}

Scalar gibbs_residual(const EosModel& m, Scalar rho, Scalar theta, Scalar h) {
  const Scalar a = m.a;
  auto p = [&](Scalar r, Scalar t) { return pressure(m, r, t, a, 0.0); };
  auto e = [&](Scalar r, Scalar t) { return internal_energy(m, r, t, a) / r; };
  auto s = [&](Scalar r, Scalar t) { return entropy(m, r, t, a) / r; };
  return gibbs_residual_of(p, e, s, rho, theta, h);
}

Scalar invert_temperature(const EosModel& m, Scalar rho, Scalar E, Scalar a_loc, Scalar seed) {
  require(rho >= 0.0, "invert_temperature: density must be nonnegative");
  const Scalar floor = cold_floor(m, rho);
  const Scalar scale = std::max({std::fabs(E), floor, 1e-30});
  Scalar et = E - floor;  // energy above the cold floor
  if (et < 0.0) {
    require(et > -1e-12 * scale, "invert_temperature: energy below the cold floor");
    et = 0.0;
  }
  if (rho == 0.0) {
    require(a_loc > 0.0, "invert_temperature: vacuum with no radiation, temperature undetermined");
    return std::sqrt(std::sqrt(E / a_loc));
  }
  require(et > 0.0, "invert_temperature: energy below the cold floor");

  if (m.is_default()) {
    // f(theta) = 1.5 rho theta + a_loc theta^4 - et, increasing and convex.
    Scalar hi = et / (1.5 * rho);
    if (a_loc > 0.0) hi = std::min(hi, std::sqrt(std::sqrt(et / a_loc)));
    Scalar th = (seed > 0.0 && seed < hi) ? seed : hi;
    for (int it = 0; it < 100; ++it) {
      const Scalar t2 = th * th;
      const Scalar f = 1.5 * rho * th + a_loc * t2 * t2 - et;
      const Scalar df = 1.5 * rho + 4.0 * a_loc * th * t2;
      const Scalar step = f / df;
      th -= step;
      if (th <= 0.0) th = 0.5 * (th + step);  // fell out of the bracket, bisect back
      if (std::fabs(step) <= 1e-13 * th) break;
    }
    return th;
  }

  // Generic structure function: monotone bisection with Newton polish.
  Scalar lo = 1e-14, hi = 1.0;
  while (internal_energy(m, rho, hi, a_loc) - floor < et && hi < 1e14) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const Scalar mid = 0.5 * (lo + hi);
    if (internal_energy(m, rho, mid, a_loc) - floor < et)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-13 * hi) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace nsf::thermo
