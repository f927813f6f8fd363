#pragma once

#include <vector>

#include "nsf/core/types.hpp"
#include "nsf/fields/grid.hpp"
#include "nsf/geometry/moving_domain.hpp"

namespace nsf::geometry {

// Smooth profiles used by every penalty term. Bandwidths are lengths.

// C^1 cosine ramp from 1 (phi <= 0, inside) down to A across (0, alpha).
Scalar mollifier_profile(Scalar phi, Scalar A, Scalar alpha);

// One-dimensional smeared delta, support |phi| < bw, unit mass.
Scalar smeared_delta(Scalar phi, Scalar bw);

// Companion smeared step: 0 for phi <= -bw, 1 for phi >= bw, derivative equal
// to smeared_delta in between.
Scalar smeared_heaviside(Scalar phi, Scalar bw);

// Per-cell coefficient field chi (exact jump) and chi^alpha (mollified ramp);
// value 1 in the fluid, A in the solid.
struct IndicatorField {
  Scalar contrast = 1.0;  // A
  Scalar width = 0.0;     // alpha
  std::vector<Scalar> jump;
  std::vector<Scalar> mollified;
};

IndicatorField build_indicator(const MovingDomain& domain, Scalar t, Scalar A, Scalar alpha,
                               const fields::Grid& grid);

// Everything the solver and diagnostics sample from the geometry at one time
// level: signed distance, discrete |grad phi|, surface-delta weights, outward
// normals, and the solid-side partition weight (zero on phi <= 0 cells so that
// integrals over the solid vanish exactly when the state is confined).
struct InterfaceQuadrature {
  std::vector<Scalar> phi;
  std::vector<Scalar> grad_mag;
  std::vector<Scalar> delta_w;  // smeared_delta(phi) * |grad phi|
  std::vector<Scalar> normal[2];
  std::vector<Scalar> solid_w;
};

InterfaceQuadrature sample_interface(const MovingDomain& domain, Scalar t,
                                     const fields::Grid& grid);
// In-place variant reusing the buffers (the per-step hot path).
void sample_interface_into(const MovingDomain& domain, Scalar t, const fields::Grid& grid,
                           InterfaceQuadrature& q);

// integral over Gamma_t of f, via the smeared-delta quadrature
// sum f * delta_h(phi) * |grad_h phi| * h^d with bandwidth 2h. Signals if the
// smearing band touches the box boundary.
Scalar surface_integral(const MovingDomain& domain, Scalar t, const std::vector<Scalar>& f,
                        const fields::Grid& grid);

}  // namespace nsf::geometry
