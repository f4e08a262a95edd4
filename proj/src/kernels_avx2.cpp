// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernel variants. Compiled with -mavx2; only reached after the runtime
// CPU check in kernels.cpp. Reductions keep the scalar reference order: four
// stride-4 lanes, combined (a0 + a2) + (a1 + a3), sequential remainder.
// _mm256_mul_pd / _mm256_add_pd round exactly like scalar mul/add, so the
// results are bit-identical to the scalar kernels.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>

#include "kernels_ops.hpp"

namespace clipsgd::kernels::detail {

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

namespace {

inline double reduce_lanes(__m256d acc) {
  __m128d lo = _mm256_castpd256_pd128(acc);      // (a0, a1)
  __m128d hi = _mm256_extractf128_pd(acc, 1);    // (a2, a3)
  __m128d pair = _mm_add_pd(lo, hi);             // (a0+a2, a1+a3)
  __m128d high = _mm_unpackhi_pd(pair, pair);
  return _mm_cvtsd_f64(_mm_add_sd(pair, high));  // (a0+a2) + (a1+a3)
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t n4 = n - (n % 4);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    __m256d vx = _mm256_loadu_pd(x + i);
    __m256d vy = _mm256_loadu_pd(y + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(vx, vy));
  }
  double s = reduce_lanes(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double norm_sq_avx2(const double* x, std::size_t n) { return dot_avx2(x, x, n); }

void add_avx2(const double* x, const double* y, double* out, std::size_t n) {
  std::size_t n4 = n - (n % 4);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) out[i] = x[i] + y[i];
}

void sub_avx2(const double* x, const double* y, double* out, std::size_t n) {
  std::size_t n4 = n - (n % 4);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) out[i] = x[i] - y[i];
}

void scale_avx2(const double* x, double c, double* out, std::size_t n) {
  __m256d vc = _mm256_set1_pd(c);
  std::size_t n4 = n - (n % 4);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(vc, _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) out[i] = c * x[i];
}

void step_update_avx2(const double* x, double step, const double* g, double* out,
                      std::size_t n) {
  __m256d vs = _mm256_set1_pd(step);
  std::size_t n4 = n - (n % 4);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    __m256d vg = _mm256_mul_pd(vs, _mm256_loadu_pd(g + i));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(x + i), vg));
  }
  for (; i < n; ++i) out[i] = x[i] - step * g[i];
}

void accumulate_avx2(double* acc, const double* x, std::size_t n) {
  std::size_t n4 = n - (n % 4);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

}  // namespace

const Ops kAvx2Ops = {dot_avx2,   norm_sq_avx2,     add_avx2,       sub_avx2,
                      scale_avx2, step_update_avx2, accumulate_avx2};

}  // namespace clipsgd::kernels::detail

#endif  // x86_64
