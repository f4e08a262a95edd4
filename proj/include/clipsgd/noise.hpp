// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>

#include "clipsgd/problems.hpp"
#include "clipsgd/rng.hpp"
#include "clipsgd/vector.hpp"

namespace clipsgd {

/// Isotropic gradient-noise law: a radial magnitude times a uniform direction
/// on the unit sphere (the Gaussian model uses the standard isotropic
/// construction directly). Noise is additive and state-independent, so the
/// moment bound sigma is a global constant.
struct NoiseModel {
  enum class Kind { none, gaussian, symmetric_pareto, stable_radial };

  Kind kind = Kind::none;
  std::size_t dimension = 0;
  double scale = 0.0;      // gaussian / stable_radial scale
  double x_m = 0.0;        // pareto scale (support lower bound)
  double beta = 0.0;       // pareto tail index, > 1
  double stability = 0.0;  // stable index a in (1, 2]

  static NoiseModel none(std::size_t dim);
  static NoiseModel gaussian(std::size_t dim, double scale);
  static NoiseModel symmetric_pareto(std::size_t dim, double x_m, double beta);
  static NoiseModel stable_radial(std::size_t dim, double stability, double scale);

  std::string kind_name() const;
};

/// Certifies E ||xi||^alpha <= sigma^alpha. `exact` marks closed forms;
/// the stable model is certified by numeric quadrature (relative error
/// <= 1e-8).
struct MomentCertificate {
  double alpha = 0.0;
  double sigma = 0.0;
  bool exact = true;
};

/// One draw of xi; advances the stream. Zero-mean by radial symmetry.
RealVector sample_noise(const NoiseModel& model, SeedStream& stream);

/// Allocation-free variant for inner loops.
void sample_noise_into(const NoiseModel& model, SeedStream& stream, std::span<double> out);

/// Throws CertificateError when no certificate exists (alpha outside (1,2],
/// alpha >= pareto beta, or alpha >= stable index).
MomentCertificate moment_certificate(const NoiseModel& model, double alpha);

/// grad f(x) + xi.
RealVector stochastic_gradient(const Problem& p, const NoiseModel& model,
                               const RealVector& x, SeedStream& stream);

struct MomentCheckReport {
  double estimate = 0.0;
  double bound = 0.0;   // sigma^alpha from the certificate
  double stderr_ = 0.0;
  bool passed = false;  // estimate <= bound + 3 * stderr
};

MomentCheckReport empirical_moment_check(const NoiseModel& model, double alpha,
                                         std::size_t n, SeedStream& stream);

}  // namespace clipsgd
