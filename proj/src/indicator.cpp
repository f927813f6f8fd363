#include "nsf/geometry/indicator.hpp"

#include <cmath>

namespace nsf::geometry {
namespace {
constexpr Scalar kPi = 3.14159265358979323846;
}

Scalar mollifier_profile(Scalar phi, Scalar A, Scalar alpha) {
  if (phi <= 0.0) return 1.0;
  if (phi >= alpha) return A;
  return A + (1.0 - A) * 0.5 * (1.0 + std::cos(kPi * phi / alpha));
}

Scalar smeared_delta(Scalar phi, Scalar bw) {
  if (std::fabs(phi) >= bw) return 0.0;
  return 0.5 / bw * (1.0 + std::cos(kPi * phi / bw));
}

Scalar smeared_heaviside(Scalar phi, Scalar bw) {
  if (phi <= -bw) return 0.0;
  if (phi >= bw) return 1.0;
  return 0.5 * (1.0 + phi / bw + std::sin(kPi * phi / bw) / kPi);
}

IndicatorField build_indicator(const MovingDomain& domain, Scalar t, Scalar A, Scalar alpha,
                               const fields::Grid& grid) {
  require(A > 0.0, "build_indicator: contrast A must be positive");
  require(A <= 1.0, "build_indicator: contrast A must not exceed 1");
  require(alpha >= grid.h, "build_indicator: mollification width below grid spacing");
  IndicatorField f;
  f.contrast = A;
  f.width = alpha;
  const size_t n = grid.cells();
  f.jump.resize(n);
  f.mollified.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const Scalar phi = domain.signed_distance(t, grid.center(i));
    f.jump[i] = phi <= 0.0 ? 1.0 : A;
    f.mollified[i] = mollifier_profile(phi, A, alpha);
  }
  return f;
}

namespace {

// |grad_h phi| with centered interior differences, one-sided at box walls.
void grad_magnitude(const std::vector<Scalar>& phi, const fields::Grid& g,
                    std::vector<Scalar>& out) {
  const int nx = g.n[0];
  const int ny = g.n[1];
  const Scalar invh = 1.0 / g.h;
  out.resize(phi.size());
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const size_t i = g.idx(ix, iy);
      Scalar gx;
      if (ix == 0)
        gx = (phi[g.idx(1, iy)] - phi[i]) * invh;
      else if (ix == nx - 1)
        gx = (phi[i] - phi[g.idx(nx - 2, iy)]) * invh;
      else
        gx = (phi[g.idx(ix + 1, iy)] - phi[g.idx(ix - 1, iy)]) * (0.5 * invh);
      Scalar gy = 0.0;
      if (g.dim == 2) {
        if (iy == 0)
          gy = (phi[g.idx(ix, 1)] - phi[i]) * invh;
        else if (iy == ny - 1)
          gy = (phi[i] - phi[g.idx(ix, ny - 2)]) * invh;
        else
          gy = (phi[g.idx(ix, iy + 1)] - phi[g.idx(ix, iy - 1)]) * (0.5 * invh);
      }
      out[i] = std::sqrt(gx * gx + gy * gy);
    }
  }
}

}  // namespace

void sample_interface_into(const MovingDomain& domain, Scalar t, const fields::Grid& grid,
                           InterfaceQuadrature& q) {
  const size_t n = grid.cells();
  q.phi.resize(n);
  for (size_t i = 0; i < n; ++i) q.phi[i] = domain.signed_distance(t, grid.center(i));
  grad_magnitude(q.phi, grid, q.grad_mag);

  const Scalar bw = 2.0 * grid.h;
  q.delta_w.resize(n);
  q.solid_w.resize(n);
  q.normal[0].assign(n, 0.0);
  q.normal[1].assign(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    const Scalar d = smeared_delta(q.phi[i], bw);
    q.delta_w[i] = d * q.grad_mag[i];
    q.solid_w[i] = q.phi[i] > 0.0 ? smeared_heaviside(q.phi[i], bw) : 0.0;
    if (d > 0.0) {
      const Vec nrm = domain.normal(t, grid.center(i));
      q.normal[0][i] = nrm[0];
      q.normal[1][i] = nrm[1];
    }
  }
}

InterfaceQuadrature sample_interface(const MovingDomain& domain, Scalar t,
                                     const fields::Grid& grid) {
  InterfaceQuadrature q;
  sample_interface_into(domain, t, grid, q);
  return q;
}

Scalar surface_integral(const MovingDomain& domain, Scalar t, const std::vector<Scalar>& f,
                        const fields::Grid& grid) {
  require(f.size() == grid.cells(), "surface_integral: sample count mismatch");
  const Scalar bw = 2.0 * grid.h;
  const size_t n = grid.cells();

  std::vector<Scalar> phi(n);
  for (size_t i = 0; i < n; ++i) phi[i] = domain.signed_distance(t, grid.center(i));
  std::vector<Scalar> gmag;
  grad_magnitude(phi, grid, gmag);

  Scalar acc = 0.0;
  const Scalar vol = grid.cell_volume();
  for (size_t i = 0; i < n; ++i) {
    const Scalar d = smeared_delta(phi[i], bw);
    if (d == 0.0) continue;
    const int ix = grid.ix_of(i);
    const int iy = grid.iy_of(i);
    const bool at_wall = ix == 0 || ix == grid.n[0] - 1 ||
                         (grid.dim == 2 && (iy == 0 || iy == grid.n[1] - 1));
    require(!at_wall, "surface_integral: smearing band touches the box boundary");
    acc += f[i] * d * gmag[i] * vol;
  }
  return acc;
}

}  // namespace nsf::geometry
