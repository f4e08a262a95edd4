// SPDX-License-Identifier: Apache-2.0
#include "clipsgd/omega.hpp"

#include <cmath>

namespace clipsgd {

namespace {

double solve_omega() {
  auto f = [](double x) { return x * std::exp(x) - 1.0; };
  // f(0.5) < 0 < f(0.6); bisect to the last representable midpoint.
  double lo = 0.5, hi = 0.6;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

OmegaConstant omega_constant() {
  static const double nu = solve_omega();
  return OmegaConstant{nu};
}

}  // namespace clipsgd
