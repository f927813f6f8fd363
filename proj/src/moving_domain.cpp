#include "nsf/geometry/moving_domain.hpp"

#include <cmath>

namespace nsf::geometry {

Scalar MovingDomain::signed_distance(Scalar t, const Vec& x) const {
  const Vec s = velocity.displacement(t);
  if (shape == ShapeKind::interval) {
    const Scalar a = interval_lo + s[0];
    const Scalar b = interval_hi + s[0];
    return std::max(a - x[0], x[0] - b);
  }
  const Vec r = x - (center0 + s);
  return std::sqrt(r.dot(r)) - radius;
}

Vec MovingDomain::normal(Scalar t, const Vec& x) const {
  const Vec s = velocity.displacement(t);
  Vec n;
  if (shape == ShapeKind::interval) {
    const Scalar mid = 0.5 * (interval_lo + interval_hi) + s[0];
    n[0] = x[0] < mid ? -1.0 : 1.0;
    return n;
  }
  const Vec r = x - (center0 + s);
  const Scalar rr = std::sqrt(r.dot(r));
  if (rr < 1e-14) {
    n[0] = 1.0;
    return n;
  }
  return r * (1.0 / rr);
}

Scalar MovingDomain::volume(Scalar t) const {
  (void)t;  // rigid translation preserves volume
  if (shape == ShapeKind::interval) return interval_hi - interval_lo;
  return 3.14159265358979323846 * radius * radius;
}

void MovingDomain::validate() const {
  require(min_volume > 0.0, "domain: declared minimum volume V0 must be positive");
  require(volume(0.0) >= min_volume, "domain: |Omega_0| below the declared V0");
  if (shape == ShapeKind::interval)
    require(interval_hi > interval_lo, "domain: empty interval");
  else
    require(radius > 0.0, "domain: disk radius must be positive");
}

MovingDomain make_interval_domain(Scalar a, Scalar b, const VelocityFieldSpec& vel,
                                  const Vec& box_lo, const Vec& box_hi) {
  MovingDomain d;
  d.shape = ShapeKind::interval;
  d.dim = 1;
  d.interval_lo = a;
  d.interval_hi = b;
  d.velocity = vel;
  d.box_lo = box_lo;
  d.box_hi = box_hi;
  d.min_volume = 0.5 * (b - a);
  d.validate();
  return d;
}

MovingDomain make_disk_domain(const Vec& center, Scalar radius, const VelocityFieldSpec& vel,
                              const Vec& box_lo, const Vec& box_hi) {
  MovingDomain d;
  d.shape = ShapeKind::disk;
  d.dim = 2;
  d.center0 = center;
  d.radius = radius;
  d.velocity = vel;
  d.box_lo = box_lo;
  d.box_hi = box_hi;
  d.min_volume = 0.5 * d.volume(0.0);
  d.validate();
  return d;
}

}  // namespace nsf::geometry
