// SPDX-License-Identifier: Apache-2.0
#include "clipsgd/kernels.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "kernels_ops.hpp"

namespace clipsgd::kernels {

namespace detail {

// ---------------------------------------------------------------------------
// Scalar reference kernels. These define the arithmetic order; SIMD variants
// must reproduce it bit for bit.
// ---------------------------------------------------------------------------

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  std::size_t n4 = n - (n % 4);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    a0 += x[i] * y[i];
    a1 += x[i + 1] * y[i + 1];
    a2 += x[i + 2] * y[i + 2];
    a3 += x[i + 3] * y[i + 3];
  }
  double s = (a0 + a2) + (a1 + a3);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double norm_sq_scalar(const double* x, std::size_t n) { return dot_scalar(x, x, n); }

void add_scalar(const double* x, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + y[i];
}

void sub_scalar(const double* x, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - y[i];
}

void scale_scalar(const double* x, double c, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = c * x[i];
}

void step_update_scalar(const double* x, double step, const double* g, double* out,
                        std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - step * g[i];
}

void accumulate_scalar(double* acc, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

constexpr Ops kScalarOps = {dot_scalar,   norm_sq_scalar,     add_scalar,       sub_scalar,
                            scale_scalar, step_update_scalar, accumulate_scalar};

#if defined(__x86_64__) || defined(_M_X64)
extern const Ops kAvx2Ops;  // kernels_avx2.cpp
bool avx2_supported();
#endif
#if defined(__aarch64__)
extern const Ops kNeonOps;  // kernels_neon.cpp
#endif

const Ops* ops_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &kScalarOps;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (avx2_supported()) return &kAvx2Ops;
#endif
      return nullptr;
    case Backend::neon:
#if defined(__aarch64__)
      return &kNeonOps;
#endif
      return nullptr;
  }
  return nullptr;
}

Backend detect_best() {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_supported()) return Backend::avx2;
#elif defined(__aarch64__)
  return Backend::neon;
#endif
  return Backend::scalar;
}

struct Dispatch {
  std::atomic<const Ops*> ops;
  std::atomic<Backend> backend;
  Dispatch() {
    Backend b = detect_best();
    backend.store(b);
    ops.store(ops_for(b));
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace detail

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> supported_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (detail::ops_for(Backend::avx2)) out.push_back(Backend::avx2);
  if (detail::ops_for(Backend::neon)) out.push_back(Backend::neon);
  return out;
}

Backend active_backend() { return detail::dispatch().backend.load(); }

void set_backend(Backend b) {
  const detail::Ops* ops = detail::ops_for(b);
  if (!ops) {
    throw std::runtime_error(std::string("kernel backend not supported on this CPU: ") +
                             backend_name(b));
  }
  detail::dispatch().backend.store(b);
  detail::dispatch().ops.store(ops);
}

namespace {
inline const detail::Ops& ops() { return *detail::dispatch().ops.load(); }
}  // namespace

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  return ops().dot(x.data(), y.data(), x.size());
}

double norm_sq(std::span<const double> x) { return ops().norm_sq(x.data(), x.size()); }

double norm(std::span<const double> x) { return std::sqrt(norm_sq(x)); }

void add(std::span<const double> x, std::span<const double> y, std::span<double> out) {
  assert(x.size() == y.size() && x.size() == out.size());
  ops().add(x.data(), y.data(), out.data(), x.size());
}

void sub(std::span<const double> x, std::span<const double> y, std::span<double> out) {
  assert(x.size() == y.size() && x.size() == out.size());
  ops().sub(x.data(), y.data(), out.data(), x.size());
}

void scale(std::span<const double> x, double c, std::span<double> out) {
  assert(x.size() == out.size());
  ops().scale(x.data(), c, out.data(), x.size());
}

void step_update(std::span<const double> x, double step, std::span<const double> g,
                 std::span<double> out) {
  assert(x.size() == g.size() && x.size() == out.size());
  ops().step_update(x.data(), step, g.data(), out.data(), x.size());
}

void accumulate(std::span<double> acc, std::span<const double> x) {
  assert(acc.size() == x.size());
  ops().accumulate(acc.data(), x.data(), x.size());
}

}  // namespace clipsgd::kernels
