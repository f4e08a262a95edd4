// SPDX-License-Identifier: Apache-2.0
#include "clipsgd/vector.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "clipsgd/kernels.hpp"

namespace clipsgd {

namespace {

void require_finite(const std::vector<double>& e) {
  for (double x : e) {
    if (!std::isfinite(x)) throw NonFiniteError("RealVector entry is not finite");
  }
}

void require_same_dim(const RealVector& a, const RealVector& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("vector dimensions differ");
}

}  // namespace

RealVector::RealVector(std::vector<double> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw DimensionMismatchError("RealVector requires dimension >= 1");
  require_finite(e_);
}

RealVector::RealVector(std::initializer_list<double> entries)
    : RealVector(std::vector<double>(entries)) {}

RealVector RealVector::zeros(std::size_t dim) {
  if (dim == 0) throw DimensionMismatchError("RealVector requires dimension >= 1");
  RealVector v;
  v.e_.assign(dim, 0.0);
  return v;
}

RealVector RealVector::unchecked(std::vector<double> entries) {
  RealVector v;
  v.e_ = std::move(entries);
  return v;
}

bool RealVector::all_finite() const {
  for (double x : e_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

double norm(const RealVector& v) { return kernels::norm(v.span()); }
double norm_sq(const RealVector& v) { return kernels::norm_sq(v.span()); }

double dot(const RealVector& a, const RealVector& b) {
  require_same_dim(a, b);
  return kernels::dot(a.span(), b.span());
}

RealVector add(const RealVector& a, const RealVector& b) {
  require_same_dim(a, b);
  std::vector<double> out(a.size());
  kernels::add(a.span(), b.span(), {out.data(), out.size()});
  return RealVector::unchecked(std::move(out));
}

RealVector sub(const RealVector& a, const RealVector& b) {
  require_same_dim(a, b);
  std::vector<double> out(a.size());
  kernels::sub(a.span(), b.span(), {out.data(), out.size()});
  return RealVector::unchecked(std::move(out));
}

RealVector scale(const RealVector& v, double c) {
  std::vector<double> out(v.size());
  kernels::scale(v.span(), c, {out.data(), out.size()});
  return RealVector::unchecked(std::move(out));
}

RealVector clip(const RealVector& v, double lambda) {
  if (std::isnan(lambda) || lambda < 0.0) {
    throw NonFiniteError("clip level must be a nonnegative real (or +inf)");
  }
  if (!v.all_finite()) throw NonFiniteError("clip input is not finite");
  const double n = norm(v);
  if (n <= lambda) return v;
  double factor = lambda / n;  // lambda = 0 gives the zero vector
  std::vector<double> out(v.size());
  kernels::scale(v.span(), factor, {out.data(), out.size()});
  // Rounding can push the scaled norm a few ulp above lambda; nudge the
  // factor down until the cap holds exactly.
  while (kernels::norm({out.data(), out.size()}) > lambda) {
    factor *= 1.0 - std::numeric_limits<double>::epsilon();
    kernels::scale(v.span(), factor, {out.data(), out.size()});
  }
  return RealVector::unchecked(std::move(out));
}

}  // namespace clipsgd
