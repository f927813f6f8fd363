#pragma once

#include <vector>

#include "nsf/core/types.hpp"

namespace nsf::geometry {

// Analytic forms for the prescribed boundary velocity V(t,x). All fields are
// compactly supported inside the box: translation-type fields carry a C^1
// taper towards the box walls, the rotation field a radial one. The taper is
// flat (w == 1) on the region swept by the interface, so div V vanishes on a
// tube around Gamma_t and the flow map of interface points is exact.
enum class VelocityKind { zero, constant, piston, rotation };

struct VelocityFieldSpec {
  VelocityKind kind = VelocityKind::zero;
  int dim = 1;

  // constant: V = amplitude * w(x)
  // piston:   displacement s(t) = amplitude * sin(rate*t), V = s'(t) * w(x)
  // rotation: V = rate * (-(x1-c1), x0-c0) * w(|x-c|)
  Vec amplitude;
  Scalar rate = 0.0;
  Vec center;

  // Box used for the taper and for point-admissibility checks.
  Vec box_lo, box_hi;
  // w = 0 within margin0 of the box wall, w = 1 beyond margin1 (per axis).
  Scalar margin0 = 0.0;
  Scalar margin1 = 0.0;
  // rotation only: w = 1 for r <= flat_radius, 0 for r >= support_radius.
  Scalar flat_radius = 0.0;
  Scalar support_radius = 0.0;

  Vec eval(Scalar t, const Vec& x) const;
  Vec time_derivative(Scalar t, const Vec& x) const;
  // grad(i,j) = d V_j / d x_i
  Mat gradient(Scalar t, const Vec& x) const;
  Scalar divergence(Scalar t, const Vec& x) const;

  // Translation kinds only: exact displacement of points in the flat region.
  Vec displacement(Scalar t) const;

  // Compact-support taper w(x) of the translation kinds and its gradient
  // (V = v(t) w(x)); exposed so per-run caches can be built once.
  Scalar taper_value(const Vec& x) const;
  Vec taper_gradient(const Vec& x) const;

  bool inside_box(const Vec& x) const;
};

// Images of points under dX/dt = V(t, X), classic RK4 with step dt (final
// partial step shortened to land on t1).
std::vector<Vec> advance_flow_map(const VelocityFieldSpec& spec, std::vector<Vec> points,
                                  Scalar t0, Scalar t1, Scalar dt);

}  // namespace nsf::geometry
