#include "nsf/core/kernels.hpp"

#include <cmath>

namespace nsf::kernels {
namespace {

void s_diff_scaled(double* out, const double* fp, const double* fm, double c, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = c * (fp[i] - fm[i]);
}

void s_axpy(double* y, double a, const double* x, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void s_upwind_flux(double* F, const double* uL, const double* uR, const double* qL,
                   const double* qR, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    const double ubar = 0.5 * (uL[i] + uR[i]);
    F[i] = ubar >= 0.0 ? ubar * qL[i] : ubar * qR[i];
  }
}

void s_diff_flux(double* F, const double* cL, const double* cR, const double* KL,
                 const double* KR, double invh, size_t n) {
  for (size_t i = 0; i < n; ++i) F[i] = 0.5 * (cL[i] + cR[i]) * (KR[i] - KL[i]) * invh;
}

void s_add_scaled_diff(double* q, const double* FL, const double* FR, double c, size_t n) {
  for (size_t i = 0; i < n; ++i) q[i] += c * (FL[i] - FR[i]);
}

double s_sum(const double* x, size_t n) {
  double a = 0.0;
  for (size_t i = 0; i < n; ++i) a += x[i];
  return a;
}

double s_dot(const double* x, const double* y, size_t n) {
  double a = 0.0;
  for (size_t i = 0; i < n; ++i) a += x[i] * y[i];
  return a;
}

double s_dot3(const double* x, const double* y, const double* z, size_t n) {
  double a = 0.0;
  for (size_t i = 0; i < n; ++i) a += x[i] * y[i] * z[i];
  return a;
}

double s_max_abs(const double* x, size_t n) {
  double a = 0.0;
  for (size_t i = 0; i < n; ++i) a = std::max(a, std::fabs(x[i]));
  return a;
}

double s_min_val(const double* x, size_t n) {
  double a = n ? x[0] : 0.0;
  for (size_t i = 1; i < n; ++i) a = std::min(a, x[i]);
  return a;
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend b{"scalar",     s_diff_scaled, s_axpy, s_upwind_flux, s_diff_flux,
                         s_add_scaled_diff, s_sum,    s_dot,  s_dot3,        s_max_abs,
                         s_min_val};
  return b;
}

}  // namespace nsf::kernels
