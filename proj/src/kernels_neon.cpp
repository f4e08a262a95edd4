// SPDX-License-Identifier: Apache-2.0
//
// NEON kernel variants for aarch64. Two 128-bit accumulators cover lanes
// {0,1} and {2,3} of the reference stride-4 reduction, combined in the same
// (a0 + a2) + (a1 + a3) order, so results match the scalar kernels bit for
// bit.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>

#include "kernels_ops.hpp"

namespace clipsgd::kernels::detail {

namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t accA = vdupq_n_f64(0.0);  // lanes 0,1
  float64x2_t accB = vdupq_n_f64(0.0);  // lanes 2,3
  std::size_t n4 = n - (n % 4);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    accA = vaddq_f64(accA, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    accB = vaddq_f64(accB, vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
  }
  double a0 = vgetq_lane_f64(accA, 0);
  double a1 = vgetq_lane_f64(accA, 1);
  double a2 = vgetq_lane_f64(accB, 0);
  double a3 = vgetq_lane_f64(accB, 1);
  double s = (a0 + a2) + (a1 + a3);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double norm_sq_neon(const double* x, std::size_t n) { return dot_neon(x, x, n); }

void add_neon(const double* x, const double* y, double* out, std::size_t n) {
  std::size_t n2 = n - (n % 2);
  std::size_t i = 0;
  for (; i < n2; i += 2) vst1q_f64(out + i, vaddq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  for (; i < n; ++i) out[i] = x[i] + y[i];
}

void sub_neon(const double* x, const double* y, double* out, std::size_t n) {
  std::size_t n2 = n - (n % 2);
  std::size_t i = 0;
  for (; i < n2; i += 2) vst1q_f64(out + i, vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  for (; i < n; ++i) out[i] = x[i] - y[i];
}

void scale_neon(const double* x, double c, double* out, std::size_t n) {
  float64x2_t vc = vdupq_n_f64(c);
  std::size_t n2 = n - (n % 2);
  std::size_t i = 0;
  for (; i < n2; i += 2) vst1q_f64(out + i, vmulq_f64(vc, vld1q_f64(x + i)));
  for (; i < n; ++i) out[i] = c * x[i];
}

void step_update_neon(const double* x, double step, const double* g, double* out,
                      std::size_t n) {
  float64x2_t vs = vdupq_n_f64(step);
  std::size_t n2 = n - (n % 2);
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    float64x2_t vg = vmulq_f64(vs, vld1q_f64(g + i));
    vst1q_f64(out + i, vsubq_f64(vld1q_f64(x + i), vg));
  }
  for (; i < n; ++i) out[i] = x[i] - step * g[i];
}

void accumulate_neon(double* acc, const double* x, std::size_t n) {
  std::size_t n2 = n - (n % 2);
  std::size_t i = 0;
  for (; i < n2; i += 2) vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vld1q_f64(x + i)));
  for (; i < n; ++i) acc[i] += x[i];
}

}  // namespace

const Ops kNeonOps = {dot_neon,   norm_sq_neon,     add_neon,       sub_neon,
                      scale_neon, step_update_neon, accumulate_neon};

}  // namespace clipsgd::kernels::detail

#endif  // __aarch64__
