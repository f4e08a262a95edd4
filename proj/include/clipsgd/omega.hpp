// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace clipsgd {

/// nu solves x * exp(x) = 1 (computed by bisection, not hard-coded, so no
/// transcription risk). Invariants: |nu*exp(nu) - 1| <= 1e-12 and
/// 0.5 <= nu < 1.
struct OmegaConstant {
  double nu;
};

OmegaConstant omega_constant();

}  // namespace clipsgd
