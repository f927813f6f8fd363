// AVX2 variants of the grid kernels. Compiled with -mavx2 in its own TU;
// selected at runtime only when the CPU reports AVX2. The elementwise kernels
// perform the same IEEE operations per element as the scalar reference (no
// FMA), so they match it bitwise. Reductions use 4 independent lanes combined
// in a fixed order: deterministic, but not bitwise-equal to the scalar sum.

#if defined(__x86_64__)

#include <immintrin.h>

#include <cmath>

#include "nsf/core/kernels.hpp"

namespace nsf::kernels {
namespace {

void v_diff_scaled(double* out, const double* fp, const double* fm, double c, size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(fp + i);
    const __m256d b = _mm256_loadu_pd(fm + i);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(vc, _mm256_sub_pd(a, b)));
  }
  for (; i < n; ++i) out[i] = c * (fp[i] - fm[i]);
}

void v_axpy(double* y, double a, const double* x, size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d vx = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void v_upwind_flux(double* F, const double* uL, const double* uR, const double* qL,
                   const double* qR, size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d zero = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ubar =
        _mm256_mul_pd(half, _mm256_add_pd(_mm256_loadu_pd(uL + i), _mm256_loadu_pd(uR + i)));
    const __m256d mask = _mm256_cmp_pd(ubar, zero, _CMP_GE_OQ);
    const __m256d q = _mm256_blendv_pd(_mm256_loadu_pd(qR + i), _mm256_loadu_pd(qL + i), mask);
    _mm256_storeu_pd(F + i, _mm256_mul_pd(ubar, q));
  }
  for (; i < n; ++i) {
    const double ubar = 0.5 * (uL[i] + uR[i]);
    F[i] = ubar >= 0.0 ? ubar * qL[i] : ubar * qR[i];
  }
}

void v_diff_flux(double* F, const double* cL, const double* cR, const double* KL,
                 const double* KR, double invh, size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d vih = _mm256_set1_pd(invh);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d cf =
        _mm256_mul_pd(half, _mm256_add_pd(_mm256_loadu_pd(cL + i), _mm256_loadu_pd(cR + i)));
    const __m256d dK = _mm256_sub_pd(_mm256_loadu_pd(KR + i), _mm256_loadu_pd(KL + i));
    _mm256_storeu_pd(F + i, _mm256_mul_pd(_mm256_mul_pd(cf, dK), vih));
  }
  for (; i < n; ++i) F[i] = 0.5 * (cL[i] + cR[i]) * (KR[i] - KL[i]) * invh;
}

void v_add_scaled_diff(double* q, const double* FL, const double* FR, double c, size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(FL + i), _mm256_loadu_pd(FR + i));
    _mm256_storeu_pd(q + i, _mm256_add_pd(_mm256_loadu_pd(q + i), _mm256_mul_pd(vc, d)));
  }
  for (; i < n; ++i) q[i] += c * (FL[i] - FR[i]);
}

// Lane layout: acc[k] accumulates elements k, k+4, k+8, ...; lanes are folded
// 0..3 after the loop, then the scalar tail is added. Order is fixed.
double v_sum(const double* x, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double a = ((lane[0] + lane[1]) + lane[2]) + lane[3];
  for (; i < n; ++i) a += x[i];
  return a;
}

double v_dot(const double* x, const double* y, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double a = ((lane[0] + lane[1]) + lane[2]) + lane[3];
  for (; i < n; ++i) a += x[i] * y[i];
  return a;
}

double v_dot3(const double* x, const double* y, const double* z, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(p, _mm256_loadu_pd(z + i)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double a = ((lane[0] + lane[1]) + lane[2]) + lane[3];
  for (; i < n; ++i) a += x[i] * y[i] * z[i];
  return a;
}

double v_max_abs(const double* x, size_t n) {
  const __m256d signmask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(signmask, _mm256_loadu_pd(x + i)));
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  double a = std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3]));
  for (; i < n; ++i) a = std::max(a, std::fabs(x[i]));
  return a;
}

double v_min_val(const double* x, size_t n) {
  if (n == 0) return 0.0;
  double a = x[0];
  size_t i = 0;
  if (n >= 4) {
    __m256d acc = _mm256_loadu_pd(x);
    i = 4;
    for (; i + 4 <= n; i += 4) acc = _mm256_min_pd(acc, _mm256_loadu_pd(x + i));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    a = std::min(std::min(lane[0], lane[1]), std::min(lane[2], lane[3]));
  }
  for (; i < n; ++i) a = std::min(a, x[i]);
  return a;
}

}  // namespace

const Backend& avx2_backend() {
  static const Backend b{"avx2",      v_diff_scaled, v_axpy, v_upwind_flux, v_diff_flux,
                         v_add_scaled_diff, v_sum,   v_dot,  v_dot3,        v_max_abs,
                         v_min_val};
  return b;
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

}  // namespace nsf::kernels

#endif  // __x86_64__
