#include "nsf/fields/ops.hpp"

#include "nsf/core/kernels.hpp"

namespace nsf::fields {

void derivative(const std::vector<Scalar>& f, const Grid& g, int axis, Ghost ghost,
                std::vector<Scalar>& out) {
  require(f.size() == g.cells(), "derivative: field size mismatch");
  require(axis >= 0 && axis < g.dim, "derivative: axis out of range");
  const size_t n = g.cells();
  out.resize(n);
  const Scalar inv2h = 0.5 / g.h;
  const int nx = g.n[0];
  const int ny = g.n[1];
  const auto& k = kernels::active();
  const Scalar sgn = ghost == Ghost::mirror ? 1.0 : -1.0;

  if (axis == 0) {
    // Bulk pass ignores row boundaries; wall columns are fixed up after.
    if (n > 2) k.diff_scaled(out.data() + 1, f.data() + 2, f.data(), inv2h, n - 2);
    for (int iy = 0; iy < ny; ++iy) {
      const size_t il = g.idx(0, iy);
      const size_t ir = g.idx(nx - 1, iy);
      out[il] = (f[il + 1] - sgn * f[il]) * inv2h;
      out[ir] = (sgn * f[ir] - f[ir - 1]) * inv2h;
    }
  } else {
    const size_t snx = static_cast<size_t>(nx);
    if (n > 2 * snx) k.diff_scaled(out.data() + snx, f.data() + 2 * snx, f.data(), inv2h,
                                   n - 2 * snx);
    for (int ix = 0; ix < nx; ++ix) {
      const size_t ib = g.idx(ix, 0);
      const size_t it = g.idx(ix, ny - 1);
      out[ib] = (f[ib + snx] - sgn * f[ib]) * inv2h;
      out[it] = (sgn * f[it] - f[it - snx]) * inv2h;
    }
  }
}

void gradient(const std::vector<Scalar>& f, const Grid& g, Ghost ghost,
              std::vector<Scalar> out[2]) {
  for (int a = 0; a < g.dim; ++a) derivative(f, g, a, ghost, out[a]);
  if (g.dim == 1) out[1].assign(f.size(), 0.0);
}

void divergence(const std::vector<Scalar> comp[2], const Grid& g, Ghost ghost,
                std::vector<Scalar>& out) {
  std::vector<Scalar> tmp;
  derivative(comp[0], g, 0, ghost, out);
  if (g.dim == 2) {
    derivative(comp[1], g, 1, ghost, tmp);
    kernels::active().axpy(out.data(), 1.0, tmp.data(), out.size());
  }
}

}  // namespace nsf::fields
