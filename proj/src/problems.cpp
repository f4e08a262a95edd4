// SPDX-License-Identifier: Apache-2.0
#include "clipsgd/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "clipsgd/kernels.hpp"
#include "clipsgd/omega.hpp"
#include "clipsgd/rng.hpp"

namespace clipsgd {

namespace detail {

struct ProblemImpl {
  std::string name;
  std::size_t dim = 0;
  RealVector x_star;
  double f_star = 0.0;
  SmoothnessCertificate cert;

  virtual ~ProblemImpl() = default;
  virtual void eval(std::span<const double> x, double& value,
                    std::span<double> grad) const = 0;
};

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ipow(double base, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

/// Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  return eig;
}

struct QuadraticImpl final : ProblemImpl {
  std::vector<double> diag;
  std::vector<double> b;

  void eval(std::span<const double> x, double& value, std::span<double> grad) const override {
    double v = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const double dx = diag[i] * x[i];
      v += 0.5 * x[i] * dx - b[i] * x[i];
      grad[i] = dx - b[i];
    }
    value = v;
  }
};

struct PowerNormImpl final : ProblemImpl {
  int n = 0;

  void eval(std::span<const double> x, double& value, std::span<double> grad) const override {
    const double r = kernels::norm(x);
    value = ipow(r, n);
    const double factor = n * ipow(r, n - 2);
    kernels::scale(x, factor, grad);
  }
};

struct CoshNormImpl final : ProblemImpl {
  void eval(std::span<const double> x, double& value, std::span<double> grad) const override {
    const double r = kernels::norm(x);
    const double ep = std::exp(r);
    const double em = std::exp(-r);
    value = ep + em;
    if (r == 0.0) {
      std::fill(grad.begin(), grad.end(), 0.0);
      return;
    }
    const double factor = (ep - em) / r;
    kernels::scale(x, factor, grad);
  }
};

struct SymExpSumImpl final : ProblemImpl {
  std::size_t m = 0;
  std::vector<double> rows;  // m x dim, row-major unit vectors a_i
  std::vector<double> b;     // <a_i, x_star>

  void eval(std::span<const double> x, double& value, std::span<double> grad) const override {
    double v = 0.0;
    std::fill(grad.begin(), grad.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      std::span<const double> a{rows.data() + i * dim, dim};
      const double s = kernels::dot(a, x) - b[i];
      const double ep = std::exp(s);
      const double em = std::exp(-s);
      v += ep + em;
      const double coeff = ep - em;
      for (std::size_t j = 0; j < dim; ++j) grad[j] += coeff * a[j];
    }
    value = v;
  }
};

void check_minimizer(const ProblemImpl& impl) {
  std::vector<double> g(impl.dim);
  double v = 0.0;
  impl.eval(impl.x_star.span(), v, {g.data(), g.size()});
  if (kernels::norm({g.data(), g.size()}) > 1e-9) {
    throw CertificateError(impl.name + ": gradient at x_star exceeds 1e-9");
  }
}

}  // namespace

}  // namespace detail

Problem::Problem(std::shared_ptr<const detail::ProblemImpl> impl) : impl_(std::move(impl)) {}

const std::string& Problem::name() const { return impl_->name; }
std::size_t Problem::dimension() const { return impl_->dim; }
const RealVector& Problem::x_star() const { return impl_->x_star; }
double Problem::f_star() const { return impl_->f_star; }
const SmoothnessCertificate& Problem::certificate() const { return impl_->cert; }

Evaluation Problem::evaluate(const RealVector& x) const {
  if (x.size() != impl_->dim) throw DimensionMismatchError(impl_->name + ": dimension mismatch");
  Evaluation out;
  std::vector<double> g(impl_->dim);
  impl_->eval(x.span(), out.value, {g.data(), g.size()});
  out.gradient = RealVector::unchecked(std::move(g));
  return out;
}

double Problem::value(const RealVector& x) const { return evaluate(x).value; }
RealVector Problem::gradient(const RealVector& x) const { return evaluate(x).gradient; }

void Problem::evaluate_into(std::span<const double> x, double& value,
                            std::span<double> grad) const {
  impl_->eval(x, value, grad);
}

Problem make_quadratic(std::vector<double> diag, std::vector<double> b) {
  if (diag.empty()) throw DimensionMismatchError("quadratic: dimension >= 1 required");
  if (b.empty()) b.assign(diag.size(), 0.0);
  if (b.size() != diag.size()) throw DimensionMismatchError("quadratic: diag/b size mismatch");
  double lmax = 0.0;
  for (double d : diag) {
    if (!(d > 0.0)) throw CertificateError("quadratic: diagonal must be positive (SPD)");
    lmax = std::max(lmax, d);
  }
  auto impl = std::make_shared<detail::QuadraticImpl>();
  impl->name = "quadratic";
  impl->dim = diag.size();
  std::vector<double> xs(diag.size());
  double fs = 0.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    xs[i] = b[i] / diag[i];
    fs -= 0.5 * b[i] * b[i] / diag[i];
  }
  impl->x_star = RealVector(std::move(xs));
  impl->f_star = fs;
  impl->cert = {lmax, 0.0, detail::kInf};
  impl->diag = std::move(diag);
  impl->b = std::move(b);
  detail::check_minimizer(*impl);
  return Problem(impl);
}

Problem make_power_norm(std::size_t dim, int exponent, double l1) {
  if (dim == 0) throw DimensionMismatchError("power_norm: dimension >= 1 required");
  if (exponent <= 2) throw CertificateError("power_norm: exponent must be an integer > 2");
  if (!(l1 > 0.0)) throw CertificateError("power_norm: certificate L1 must be positive");
  auto impl = std::make_shared<detail::PowerNormImpl>();
  impl->name = "power_norm";
  impl->dim = dim;
  impl->n = exponent;
  impl->x_star = RealVector::zeros(dim);
  impl->f_star = 0.0;
  const double l0 =
      exponent * detail::ipow((exponent - 2) / l1, exponent - 2);
  impl->cert = {l0, l1, detail::kInf};
  detail::check_minimizer(*impl);
  return Problem(impl);
}

Problem make_cosh_norm(std::size_t dim) {
  if (dim == 0) throw DimensionMismatchError("cosh_norm: dimension >= 1 required");
  auto impl = std::make_shared<detail::CoshNormImpl>();
  impl->name = "cosh_norm";
  impl->dim = dim;
  impl->x_star = RealVector::zeros(dim);
  impl->f_star = 2.0;
  impl->cert = {2.0, 1.0, detail::kInf};
  detail::check_minimizer(*impl);
  return Problem(impl);
}

Problem make_sym_exp_sum(std::size_t dim, std::size_t terms, std::uint64_t seed) {
  if (dim == 0) throw DimensionMismatchError("sym_exp_sum: dimension >= 1 required");
  if (terms == 0 || terms > dim) {
    throw CertificateError("sym_exp_sum: requires 1 <= terms <= dimension");
  }
  auto impl = std::make_shared<detail::SymExpSumImpl>();
  impl->name = "sym_exp_sum";
  impl->dim = dim;
  impl->m = terms;

  SeedStream stream(seed, 0);
  std::vector<double> xs(dim);
  fill_gaussian(stream, {xs.data(), dim});
  const double xscale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (double& x : xs) x *= xscale;
  impl->x_star = RealVector(std::move(xs));

  // Draw unit rows until the Gram matrix is comfortably nonsingular; the
  // certificate needs lambda_min(A A^T) > 0.
  double lmin = 0.0;
  for (;;) {
    impl->rows.assign(terms * dim, 0.0);
    for (std::size_t i = 0; i < terms; ++i) {
      fill_unit_sphere(stream, {impl->rows.data() + i * dim, dim});
    }
    std::vector<double> gram(terms * terms);
    for (std::size_t i = 0; i < terms; ++i) {
      for (std::size_t j = 0; j < terms; ++j) {
        gram[i * terms + j] = kernels::dot({impl->rows.data() + i * dim, dim},
                                           {impl->rows.data() + j * dim, dim});
      }
    }
    auto eig = detail::jacobi_eigenvalues(std::move(gram), terms);
    lmin = *std::min_element(eig.begin(), eig.end());
    if (lmin > 1e-6) break;
  }

  impl->b.resize(terms);
  for (std::size_t i = 0; i < terms; ++i) {
    impl->b[i] = kernels::dot({impl->rows.data() + i * dim, dim}, impl->x_star.span());
  }
  impl->f_star = 2.0 * static_cast<double>(terms);
  impl->cert = {2.0 * static_cast<double>(terms),
                std::sqrt(static_cast<double>(terms) / lmin), detail::kInf};
  detail::check_minimizer(*impl);
  return Problem(impl);
}

double suboptimality(const Problem& p, const RealVector& x) {
  const double gap = p.value(x) - p.f_star();
  const double scale = 1.0 + std::abs(p.f_star());
  if (gap < -1e-9 * scale) {
    throw CertificateError(p.name() + ": value below f_star; x_star was not optimal");
  }
  return std::max(gap, 0.0);
}

PropCheck check_prop_gradient_bound(const Problem& p, const RealVector& x) {
  const Evaluation e = p.evaluate(x);
  const double gn = norm(e.gradient);
  const auto& cert = p.certificate();
  PropCheck out;
  out.lhs = omega_constant().nu * gn * gn;
  out.rhs = 2.0 * (cert.L0 + cert.L1 * gn) * (e.value - p.f_star());
  out.holds = out.lhs <= out.rhs * (1.0 + 1e-9) + 1e-15 * (1.0 + out.lhs);
  return out;
}

PropCheck check_prop_exponential(const Problem& p, const RealVector& x,
                                 const RealVector& y) {
  const Evaluation ex = p.evaluate(x);
  const Evaluation ey = p.evaluate(y);
  const auto& cert = p.certificate();
  const double dist = norm(sub(y, x));
  PropCheck out;
  out.lhs = norm(sub(ey.gradient, ex.gradient));
  out.rhs = (cert.L0 + cert.L1 * norm(ex.gradient)) * std::exp(cert.L1 * dist) * dist;
  out.holds = out.lhs <= out.rhs * (1.0 + 1e-9) + 1e-15 * (1.0 + out.lhs);
  return out;
}

PropCheck check_generalized_smoothness(const Problem& p, const RealVector& x,
                                       const RealVector& y, int seg_samples) {
  if (seg_samples < 2) throw ConfigError("seg_samples must be >= 2");
  const Evaluation ex = p.evaluate(x);
  const Evaluation ey = p.evaluate(y);
  const auto& cert = p.certificate();
  const double dist = norm(sub(y, x));

  double sup = 0.0;
  RealVector u = x;
  for (int j = 0; j < seg_samples; ++j) {
    const double t = static_cast<double>(j) / (seg_samples - 1);
    for (std::size_t i = 0; i < x.size(); ++i) u[i] = x[i] + t * (y[i] - x[i]);
    sup = std::max(sup, norm(p.gradient(u)));
  }

  PropCheck out;
  out.lhs = norm(sub(ey.gradient, ex.gradient));
  out.rhs = (cert.L0 + cert.L1 * sup) * dist;
  out.holds = out.lhs <= out.rhs * (1.0 + 1e-9) + 1e-15 * (1.0 + out.lhs);
  return out;
}

}  // namespace clipsgd
