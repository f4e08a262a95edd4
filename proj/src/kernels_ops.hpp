// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace clipsgd::kernels::detail {

// One table per backend; unsupported backends expose null pointers.
struct Ops {
  double (*dot)(const double*, const double*, std::size_t);
  double (*norm_sq)(const double*, std::size_t);
  void (*add)(const double*, const double*, double*, std::size_t);
  void (*sub)(const double*, const double*, double*, std::size_t);
  void (*scale)(const double*, double, double*, std::size_t);
  void (*step_update)(const double*, double, const double*, double*, std::size_t);
  void (*accumulate)(double*, const double*, std::size_t);
};

}  // namespace clipsgd::kernels::detail
