#include "gaussbound/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "gaussbound/errors.hpp"

namespace gaussbound {

namespace {

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

void check_distinct(const std::vector<Point>& centers) {
  double diam = 0.0;
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j)
      diam = std::max(diam, (centers[i] - centers[j]).norm());
  const double tol = 1e-12 * diam;
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j)
      if ((centers[i] - centers[j]).norm() <= tol)
        throw std::invalid_argument("duplicate centers at indices " +
                                    std::to_string(i) + ", " + std::to_string(j));
}

// Gram matrix in extended precision. The desk-scale regimes of interest sit
// deep in the flat-kernel limit where the smallest pivot can fall below
// double roundoff while still being a perfectly well-defined positive
// number; long double keeps it resolvable.
MatrixXld gram_long(const GaussianKernel& k, const std::vector<Point>& centers) {
  const auto n = static_cast<Eigen::Index>(centers.size());
  MatrixXld a(n, n);
  const long double beta = k.beta;
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = 1.0L;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      long double r2 = 0.0L;
      for (int d = 0; d < centers[i].size(); ++d) {
        const long double diff = static_cast<long double>(centers[i][d]) -
                                 static_cast<long double>(centers[j][d]);
        r2 += diff * diff;
      }
      a(i, j) = a(j, i) = std::exp(-beta * r2);
    }
  }
  return a;
}

}  // namespace

double kernel_eval(const GaussianKernel& k, double r2) {
  if (!(k.beta > 0.0)) throw std::invalid_argument("kernel_eval: beta must be positive");
  if (r2 < 0.0) throw std::invalid_argument("kernel_eval: negative squared distance");
  return std::exp(-k.beta * r2);
}

Eigen::MatrixXd gram_matrix(const GaussianKernel& k, const std::vector<Point>& centers) {
  if (centers.empty()) throw std::invalid_argument("gram_matrix: no centers");
  check_distinct(centers);
  const auto n = static_cast<Eigen::Index>(centers.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j)
      a(i, j) = a(j, i) = kernel_eval(k, (centers[i] - centers[j]).squaredNorm());
  }
  return a;
}

double Interpolant::evaluate(const Point& x) const {
  if (x.size() != centers_.front().size())
    throw std::invalid_argument("Interpolant::evaluate: dimension mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < centers_.size(); ++j)
    s += coefficients_[static_cast<Eigen::Index>(j)] *
         kernel_eval(kernel_, (x - centers_[j]).squaredNorm());
  return s;
}

Interpolant fit_interpolant(const GaussianKernel& k, std::vector<Point> centers,
                            const Eigen::VectorXd& values) {
  if (centers.empty()) throw std::invalid_argument("fit_interpolant: no centers");
  if (values.size() != static_cast<Eigen::Index>(centers.size()))
    throw std::invalid_argument("fit_interpolant: center/value count mismatch");
  if (!values.allFinite())
    throw std::invalid_argument("fit_interpolant: values must be finite");
  if (!(k.beta > 0.0)) throw std::invalid_argument("fit_interpolant: beta must be positive");
  check_distinct(centers);

  const auto n = static_cast<Eigen::Index>(centers.size());
  const MatrixXld a = gram_long(k, centers);
  const long double trace = static_cast<long double>(n);  // unit diagonal

  // Exact 2-norm condition from the full spectrum.
  Eigen::SelfAdjointEigenSolver<MatrixXld> eig(a, Eigen::EigenvaluesOnly);
  const long double lam_min = eig.eigenvalues().minCoeff();
  const long double lam_max = eig.eigenvalues().maxCoeff();
  const double condition =
      lam_min > 0.0L ? static_cast<double>(lam_max / lam_min)
                     : std::numeric_limits<double>::infinity();

  Eigen::LLT<MatrixXld> llt(a);
  long double min_pivot = std::numeric_limits<long double>::infinity();
  if (llt.info() == Eigen::Success) {
    const MatrixXld l = llt.matrixL();
    for (Eigen::Index i = 0; i < n; ++i) min_pivot = std::min(min_pivot, l(i, i));
  }
  if (llt.info() != Eigen::Success || !(min_pivot >= 1e-14L * trace))
    throw ConditioningError(
        "fit_interpolant: Gram matrix numerically not positive definite "
        "(min pivot " +
            std::to_string(static_cast<double>(min_pivot)) + " against 1e-14 * trace " +
            std::to_string(static_cast<double>(1e-14L * trace)) +
            "); retry at smaller degree or larger beta * diam^2",
        condition);

  VectorXld f(n);
  for (Eigen::Index i = 0; i < n; ++i) f[i] = values[i];
  VectorXld c = llt.solve(f);
  for (int step = 0; step < 3; ++step) {
    const VectorXld r = f - a * c;
    if (r.template lpNorm<Eigen::Infinity>() == 0.0L) break;
    c += llt.solve(r);
  }

  Interpolant s;
  s.kernel_ = k;
  s.centers_ = std::move(centers);
  s.coefficients_ = c.cast<double>();

  double residual_max = 0.0;
  double max_value = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    residual_max = std::max(residual_max, std::abs(s.evaluate(s.centers_[i]) - values[i]));
    max_value = std::max(max_value, std::abs(values[i]));
  }
  // Interpolation conditions are part of the contract: a solve that cannot
  // meet them after refinement is reported as a conditioning failure, never
  // returned as a usable interpolant.
  if (!(residual_max <= 1e-8 * (1.0 + max_value)))
    throw ConditioningError(
        "fit_interpolant: interpolation residual " + std::to_string(residual_max) +
            " exceeds tolerance after refinement; the Gram system is beyond "
            "working precision",
        condition);

  s.diagnostics_.n_centers = static_cast<int>(n);
  s.diagnostics_.condition_2norm = condition;
  s.diagnostics_.residual_max = residual_max;
  s.diagnostics_.regularization_used = false;
  return s;
}

double KernelCombination::evaluate(const Point& x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < sites.size(); ++i)
    s += coefficients[static_cast<Eigen::Index>(i)] *
         kernel_eval(kernel, (x - sites[i]).squaredNorm());
  return s;
}

double native_norm(const KernelCombination& f) {
  if (f.sites.empty()) return 0.0;
  if (f.coefficients.size() != static_cast<Eigen::Index>(f.sites.size()))
    throw std::invalid_argument("native_norm: site/coefficient count mismatch");
  if (!f.coefficients.allFinite())
    throw std::invalid_argument("native_norm: coefficients must be finite");
  const Eigen::MatrixXd a = gram_matrix(f.kernel, f.sites);
  const double q = f.coefficients.dot(a * f.coefficients);
  // The quadratic form is nonnegative in exact arithmetic; clip roundoff.
  return std::sqrt(std::max(q, 0.0));
}

SupError sup_error_on_grid(const KernelCombination& f, const Interpolant& s,
                           const CenterGrid& probe) {
  if (probe.points().empty())
    throw std::invalid_argument("sup_error_on_grid: empty probe grid");
  SupError best;
  best.argmax = probe.points().front();
  for (const Point& x : probe.points()) {
    const double e = std::abs(f.evaluate(x) - s.evaluate(x));
    if (e > best.value) {
      best.value = e;
      best.argmax = x;
    }
  }
  return best;
}

}  // namespace gaussbound
