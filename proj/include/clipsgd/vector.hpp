// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "clipsgd/errors.hpp"

namespace clipsgd {

/// Dense d-dimensional point/gradient. Entries are finite on construction;
/// every library-produced operation preserves finiteness (the optimizer
/// checks iterates explicitly and reports divergence instead of constructing
/// non-finite vectors). The dimension is fixed for the lifetime of a value.
class RealVector {
 public:
  RealVector() = default;
  explicit RealVector(std::vector<double> entries);
  RealVector(std::initializer_list<double> entries);

  static RealVector zeros(std::size_t dim);

  /// Construction without the finiteness scan, for library internals that
  /// already guarantee it.
  static RealVector unchecked(std::vector<double> entries);

  std::size_t size() const { return e_.size(); }
  double operator[](std::size_t i) const { return e_[i]; }
  double& operator[](std::size_t i) { return e_[i]; }

  std::span<const double> span() const { return {e_.data(), e_.size()}; }
  std::span<double> mspan() { return {e_.data(), e_.size()}; }
  const std::vector<double>& entries() const { return e_; }

  bool all_finite() const;

 private:
  std::vector<double> e_;
};

double norm(const RealVector& v);
double norm_sq(const RealVector& v);
double dot(const RealVector& a, const RealVector& b);
RealVector add(const RealVector& a, const RealVector& b);
RealVector sub(const RealVector& a, const RealVector& b);
RealVector scale(const RealVector& v, double c);

/// min{1, lambda/||v||} * v. Returns v unchanged when ||v|| <= lambda (this
/// covers the zero vector for every lambda, including lambda = 0). The scaled
/// result is nudged down by one ulp steps until ||clip(v)|| <= lambda holds
/// in floating point, so the norm cap is exact and clip is exactly
/// idempotent.
RealVector clip(const RealVector& v, double lambda);

}  // namespace clipsgd
