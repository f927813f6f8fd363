#pragma once

#include <cmath>
#include <cstddef>

#include "nsf/core/types.hpp"

namespace nsf::fields {

// Fixed Cartesian box B, cell-centered, uniform spacing. Row-major with x
// fastest; in 1D the y axis collapses to a single row.
struct Grid {
  int dim = 1;
  int n[2] = {0, 1};
  Scalar lo[2] = {0.0, 0.0};
  Scalar hi[2] = {1.0, 1.0};
  Scalar h = 0.0;

  size_t cells() const { return static_cast<size_t>(n[0]) * static_cast<size_t>(n[1]); }

  size_t idx(int ix, int iy) const {
    return static_cast<size_t>(ix) + static_cast<size_t>(n[0]) * static_cast<size_t>(iy);
  }

  int ix_of(size_t i) const { return static_cast<int>(i % static_cast<size_t>(n[0])); }
  int iy_of(size_t i) const { return static_cast<int>(i / static_cast<size_t>(n[0])); }

  Vec center(size_t i) const {
    Vec x;
    x[0] = lo[0] + (ix_of(i) + 0.5) * h;
    if (dim == 2) x[1] = lo[1] + (iy_of(i) + 0.5) * h;
    return x;
  }

  Scalar cell_volume() const { return dim == 2 ? h * h : h; }
};

inline Grid make_grid(int dim, int n_per_axis, Scalar lo0, Scalar hi0, Scalar lo1 = 0.0,
                      Scalar hi1 = 1.0) {
  require(dim == 1 || dim == 2, "grid: dimension must be 1 or 2");
  require(n_per_axis >= 8, "grid: need at least 8 cells per axis");
  require(hi0 > lo0, "grid: empty extent on axis 0");
  Grid g;
  g.dim = dim;
  g.n[0] = n_per_axis;
  g.lo[0] = lo0;
  g.hi[0] = hi0;
  g.h = (hi0 - lo0) / n_per_axis;
  if (dim == 2) {
    require(hi1 > lo1, "grid: empty extent on axis 1");
    g.n[1] = n_per_axis;
    g.lo[1] = lo1;
    g.hi[1] = hi1;
    const Scalar h1 = (hi1 - lo1) / n_per_axis;
    require(std::fabs(h1 - g.h) <= 1e-12 * g.h, "grid: spacing must be uniform across axes");
  }
  return g;
}

}  // namespace nsf::fields
