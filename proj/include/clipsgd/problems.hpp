// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "clipsgd/vector.hpp"

namespace clipsgd {

/// Claimed generalized-smoothness constants:
///   ||grad f(x) - grad f(y)|| <= (L0 + L1 * sup_{u in [x,y]} ||grad f(u)||) ||x - y||
/// on the ball of radius valid_radius around x_star (infinity = everywhere).
struct SmoothnessCertificate {
  double L0 = 0.0;
  double L1 = 0.0;
  double valid_radius = 0.0;
};

struct Evaluation {
  double value = 0.0;
  RealVector gradient;
};

namespace detail {
struct ProblemImpl;
}

/// Convex objective with analytic gradient, a known minimizer x_star, the
/// optimal value f_star, and an (L0, L1) certificate. Immutable after
/// construction; evaluation is pure and thread-safe.
class Problem {
 public:
  explicit Problem(std::shared_ptr<const detail::ProblemImpl> impl);

  const std::string& name() const;
  std::size_t dimension() const;
  const RealVector& x_star() const;
  double f_star() const;
  const SmoothnessCertificate& certificate() const;

  Evaluation evaluate(const RealVector& x) const;
  double value(const RealVector& x) const;
  RealVector gradient(const RealVector& x) const;

  /// Allocation-free evaluation for inner loops. grad must have size
  /// dimension().
  void evaluate_into(std::span<const double> x, double& value,
                     std::span<double> grad) const;

 private:
  std::shared_ptr<const detail::ProblemImpl> impl_;
};

/// f(x) = 1/2 <x, A x> - <b, x> with A = diag(d_i), d_i > 0.
/// Certificate: L0 = max d_i, L1 = 0, valid everywhere.
Problem make_quadratic(std::vector<double> diag, std::vector<double> b = {});

/// f(x) = ||x||^n for integer n > 2. Certificate for a chosen L1 > 0 uses the
/// Hessian envelope L0 = n ((n-2)/L1)^(n-2), valid everywhere.
Problem make_power_norm(std::size_t dim, int exponent, double l1);

/// f(x) = exp(||x||) + exp(-||x||). Certificate (L0, L1) = (2, 1), valid
/// everywhere (cosh t <= 1 + |sinh t| applied to the radial Hessian).
Problem make_cosh_norm(std::size_t dim);

/// f(x) = sum_i exp(<a_i, x> - b_i) + exp(-<a_i, x> + b_i) with unit-norm a_i
/// drawn from `seed`, x_star drawn first and b_i = <a_i, x_star>, so the
/// linear system is consistent and f_star = 2m. Requires terms <= dim so the
/// rows are independent; certificate L0 = 2m, L1 = sqrt(m / lambda_min(A A^T)),
/// valid everywhere.
Problem make_sym_exp_sum(std::size_t dim, std::size_t terms, std::uint64_t seed);

/// f(x) - f_star, clamped to 0 within rounding; throws CertificateError when
/// the value is materially below f_star (x_star was not optimal).
double suboptimality(const Problem& p, const RealVector& x);

struct PropCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// nu ||grad f(x)||^2 <= 2 (L0 + L1 ||grad f(x)||) (f(x) - f*)
PropCheck check_prop_gradient_bound(const Problem& p, const RealVector& x);

/// ||grad f(y) - grad f(x)|| <= (L0 + L1 ||grad f(x)||) exp(L1 ||y-x||) ||y-x||
PropCheck check_prop_exponential(const Problem& p, const RealVector& x,
                                 const RealVector& y);

/// Assumption-2 form with the segment supremum approximated by the max over
/// seg_samples equispaced points of [x, y] (endpoints included).
PropCheck check_generalized_smoothness(const Problem& p, const RealVector& x,
                                       const RealVector& y, int seg_samples = 17);

}  // namespace clipsgd
