#pragma once

#include "nsf/core/types.hpp"
#include "nsf/geometry/velocity_field.hpp"

namespace nsf::geometry {

// Fluid domain Omega_t transported by the flow map of V. The shipped shapes
// (interval, disk) ride on translation fields whose taper is flat over the
// swept region, so the transported shape stays rigid and the signed distance
// is exact. Sign convention: phi < 0 inside Omega_t.
enum class ShapeKind { interval, disk };

struct MovingDomain {
  ShapeKind shape = ShapeKind::interval;
  int dim = 1;

  // interval: [a, b] at t = 0; disk: center0 and radius at t = 0.
  Scalar interval_lo = 0.0;
  Scalar interval_hi = 0.0;
  Vec center0;
  Scalar radius = 0.0;

  VelocityFieldSpec velocity;

  Vec box_lo, box_hi;
  Scalar min_volume = 0.0;  // declared lower bound V0 on |Omega_t|

  Scalar signed_distance(Scalar t, const Vec& x) const;
  // Outward unit normal of Omega_t extended off Gamma_t along distance lines.
  Vec normal(Scalar t, const Vec& x) const;
  Scalar volume(Scalar t) const;

  void validate() const;
};

MovingDomain make_interval_domain(Scalar a, Scalar b, const VelocityFieldSpec& vel,
                                  const Vec& box_lo, const Vec& box_hi);
MovingDomain make_disk_domain(const Vec& center, Scalar radius, const VelocityFieldSpec& vel,
                              const Vec& box_lo, const Vec& box_hi);

}  // namespace nsf::geometry
