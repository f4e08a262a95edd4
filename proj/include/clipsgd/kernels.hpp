// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace clipsgd::kernels {

/// Vector-arithmetic backend. All backends compute identical bit patterns:
/// reductions use four stride-4 accumulator lanes combined as
/// (a0 + a2) + (a1 + a3), followed by a sequential remainder loop, which is
/// exactly the order a 256-bit lane (or two 128-bit lanes) produces.
enum class Backend {
  scalar,
  avx2,
  neon,
};

const char* backend_name(Backend b);

/// Backends usable on this machine (always contains Backend::scalar).
std::vector<Backend> supported_backends();

Backend active_backend();

/// Select a backend; throws std::runtime_error if unsupported on this CPU.
void set_backend(Backend b);

double dot(std::span<const double> x, std::span<const double> y);
double norm_sq(std::span<const double> x);
double norm(std::span<const double> x);

/// out = x + y
void add(std::span<const double> x, std::span<const double> y, std::span<double> out);
/// out = x - y
void sub(std::span<const double> x, std::span<const double> y, std::span<double> out);
/// out = c * x
void scale(std::span<const double> x, double c, std::span<double> out);
/// out = x - step * g   (the optimizer update; no FMA, mul then sub)
void step_update(std::span<const double> x, double step, std::span<const double> g,
                 std::span<double> out);
/// acc += x
void accumulate(std::span<double> acc, std::span<const double> x);

}  // namespace clipsgd::kernels
