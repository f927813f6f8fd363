#include "nsf/geometry/velocity_field.hpp"

#include <cmath>

namespace nsf::geometry {
namespace {

constexpr Scalar kPi = 3.14159265358979323846;

// C^1 cosine smoothstep: 0 for s <= a, 1 for s >= b.
Scalar ramp(Scalar s, Scalar a, Scalar b) {
  if (s <= a) return 0.0;
  if (s >= b) return 1.0;
  return 0.5 * (1.0 - std::cos(kPi * (s - a) / (b - a)));
}

Scalar ramp_deriv(Scalar s, Scalar a, Scalar b) {
  if (s <= a || s >= b) return 0.0;
  return 0.5 * kPi / (b - a) * std::sin(kPi * (s - a) / (b - a));
}

}  // namespace

bool VelocityFieldSpec::inside_box(const Vec& x) const {
  for (int a = 0; a < dim; ++a)
    if (x[a] < box_lo[a] || x[a] > box_hi[a]) return false;
  return true;
}

namespace {

// Per-axis taper of translation fields; product over axes.
Scalar taper(const VelocityFieldSpec& s, const Vec& x) {
  if (s.margin1 <= 0.0) return 1.0;
  Scalar w = 1.0;
  for (int a = 0; a < s.dim; ++a) {
    w *= ramp(x[a] - s.box_lo[a], s.margin0, s.margin1);
    w *= ramp(s.box_hi[a] - x[a], s.margin0, s.margin1);
  }
  return w;
}

Vec taper_grad(const VelocityFieldSpec& s, const Vec& x) {
  Vec g;
  if (s.margin1 <= 0.0) return g;
  Scalar w[2] = {1.0, 1.0};
  Scalar dw[2] = {0.0, 0.0};
  for (int a = 0; a < s.dim; ++a) {
    const Scalar up = ramp(x[a] - s.box_lo[a], s.margin0, s.margin1);
    const Scalar dn = ramp(s.box_hi[a] - x[a], s.margin0, s.margin1);
    w[a] = up * dn;
    dw[a] = ramp_deriv(x[a] - s.box_lo[a], s.margin0, s.margin1) * dn -
            up * ramp_deriv(s.box_hi[a] - x[a], s.margin0, s.margin1);
  }
  if (s.dim == 1) {
    g[0] = dw[0];
  } else {
    g[0] = dw[0] * w[1];
    g[1] = w[0] * dw[1];
  }
  return g;
}

// Translation speed vector v(t) so that V = v(t) * w(x).
Vec translation_speed(const VelocityFieldSpec& s, Scalar t) {
  switch (s.kind) {
    case VelocityKind::zero:
      return Vec{};
    case VelocityKind::constant:
      return s.amplitude;
    case VelocityKind::piston:
      return s.amplitude * (s.rate * std::cos(s.rate * t));
    default:
      return Vec{};
  }
}

Vec translation_accel(const VelocityFieldSpec& s, Scalar t) {
  if (s.kind == VelocityKind::piston)
    return s.amplitude * (-s.rate * s.rate * std::sin(s.rate * t));
  return Vec{};
}

}  // namespace

Scalar VelocityFieldSpec::taper_value(const Vec& x) const { return taper(*this, x); }

Vec VelocityFieldSpec::taper_gradient(const Vec& x) const { return taper_grad(*this, x); }

Vec VelocityFieldSpec::eval(Scalar t, const Vec& x) const {
  if (kind == VelocityKind::rotation) {
    const Vec r = x - center;
    const Scalar rr = std::sqrt(r.dot(r));
    Scalar w = 1.0;
    if (support_radius > 0.0) w = ramp(support_radius - rr, 0.0, support_radius - flat_radius);
    Vec v;
    v[0] = -rate * r[1] * w;
    v[1] = rate * r[0] * w;
    return v;
  }
  return translation_speed(*this, t) * taper(*this, x);
}

Vec VelocityFieldSpec::time_derivative(Scalar t, const Vec& x) const {
  if (kind == VelocityKind::rotation) return Vec{};
  return translation_accel(*this, t) * taper(*this, x);
}

Mat VelocityFieldSpec::gradient(Scalar t, const Vec& x) const {
  Mat g;
  if (kind == VelocityKind::rotation) {
    const Vec r = x - center;
    const Scalar rr = std::sqrt(r.dot(r));
    Scalar w = 1.0, dw = 0.0;
    if (support_radius > 0.0) {
      w = ramp(support_radius - rr, 0.0, support_radius - flat_radius);
      dw = -ramp_deriv(support_radius - rr, 0.0, support_radius - flat_radius);
    }
    // V = rate * w(r) * (-r1, r0); dr/dx_i = r_i / |r|
    const Scalar inv = rr > 1e-300 ? 1.0 / rr : 0.0;
    g(0, 0) = rate * dw * r[0] * inv * (-r[1]);
    g(0, 1) = rate * (w + dw * r[0] * inv * r[0]);
    g(1, 0) = rate * (-w + dw * r[1] * inv * (-r[1]));
    g(1, 1) = rate * dw * r[1] * inv * r[0];
    return g;
  }
  const Vec v = translation_speed(*this, t);
  const Vec dwdx = taper_grad(*this, x);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = dwdx[i] * v[j];
  return g;
}

Scalar VelocityFieldSpec::divergence(Scalar t, const Vec& x) const {
  return gradient(t, x).trace(dim);
}

Vec VelocityFieldSpec::displacement(Scalar t) const {
  switch (kind) {
    case VelocityKind::zero:
      return Vec{};
    case VelocityKind::constant:
      return amplitude * t;
    case VelocityKind::piston:
      return amplitude * std::sin(rate * t);
    default:
      throw Error("displacement: not a translation field");
  }
}

std::vector<Vec> advance_flow_map(const VelocityFieldSpec& spec, std::vector<Vec> points,
                                  Scalar t0, Scalar t1, Scalar dt) {
  require(dt > 0.0, "advance_flow_map: dt must be positive");
  require(t0 <= t1, "advance_flow_map: t0 must not exceed t1");
  for (const Vec& p : points)
    require(spec.inside_box(p), "advance_flow_map: point outside the reference box");

  Scalar t = t0;
  while (t < t1 - 1e-15 * (1.0 + std::fabs(t1))) {
    const Scalar step = std::min(dt, t1 - t);
    for (Vec& p : points) {
      const Vec k1 = spec.eval(t, p);
      const Vec k2 = spec.eval(t + 0.5 * step, p + k1 * (0.5 * step));
      const Vec k3 = spec.eval(t + 0.5 * step, p + k2 * (0.5 * step));
      const Vec k4 = spec.eval(t + step, p + k3 * step);
      p = p + (k1 + (k2 + k3) * 2.0 + k4) * (step / 6.0);
    }
    t += step;
  }
  return points;
}

}  // namespace nsf::geometry
