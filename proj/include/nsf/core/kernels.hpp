#pragma once

#include <cstddef>
#include <string>

// Hot inner loops of the grid code. Every kernel has a scalar reference
// implementation and (on x86-64 with AVX2) a vectorized variant; the active
// backend is picked once at startup and can be overridden with NSF_SIMD or
// force_backend() in tests. Elementwise kernels are bit-identical across
// backends (same IEEE ops per element, contraction disabled); reductions keep
// a fixed summation order within each backend so reruns are bit-reproducible.

namespace nsf::kernels {

struct Backend {
  const char* name;

  // out[i] = c * (fp[i] - fm[i])
  void (*diff_scaled)(double* out, const double* fp, const double* fm, double c, size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double* y, double a, const double* x, size_t n);
  // First-order upwind face flux: ubar = 0.5*(uL[i]+uR[i]),
  // F[i] = ubar >= 0 ? ubar*qL[i] : ubar*qR[i]
  void (*upwind_flux)(double* F, const double* uL, const double* uR, const double* qL,
                      const double* qR, size_t n);
  // Diffusive face flux with arithmetic face mean of the coefficient:
  // F[i] = 0.5*(cL[i]+cR[i]) * (KR[i]-KL[i]) * invh
  void (*diff_flux)(double* F, const double* cL, const double* cR, const double* KL,
                    const double* KR, double invh, size_t n);
  // q[i] += c * (FL[i] - FR[i])
  void (*add_scaled_diff)(double* q, const double* FL, const double* FR, double c, size_t n);

  double (*sum)(const double* x, size_t n);
  double (*dot)(const double* x, const double* y, size_t n);
  double (*dot3)(const double* x, const double* y, const double* z, size_t n);
  double (*max_abs)(const double* x, size_t n);
  double (*min_val)(const double* x, size_t n);
};

const Backend& scalar_backend();
#if defined(__x86_64__)
const Backend& avx2_backend();
bool avx2_supported();
#endif

// Active backend: NSF_SIMD=scalar|avx2|auto (default auto).
const Backend& active();
void force_backend(const std::string& name);

// Convenience forwarding helpers.
inline double sum(const double* x, size_t n) { return active().sum(x, n); }
inline double dot(const double* x, const double* y, size_t n) { return active().dot(x, y, n); }
inline double dot3(const double* x, const double* y, const double* z, size_t n) {
  return active().dot3(x, y, z, n);
}
inline double max_abs(const double* x, size_t n) { return active().max_abs(x, n); }
inline double min_val(const double* x, size_t n) { return active().min_val(x, n); }

}  // namespace nsf::kernels
