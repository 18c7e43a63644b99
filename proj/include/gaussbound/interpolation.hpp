#pragma once

#include <Eigen/Dense>

#include <vector>

#include "gaussbound/simplex.hpp"

namespace gaussbound {

/// Gaussian kernel h(x) = exp(-beta |x|^2). Strictly positive definite,
/// so the interpolant carries no polynomial part.
struct GaussianKernel {
  double beta = 1.0;
};

/// exp(-beta * r2) for a squared distance r2 >= 0; value in (0, 1].
double kernel_eval(const GaussianKernel& k, double r2);

/// A_ij = exp(-beta |x_i - x_j|^2): symmetric, unit diagonal, positive
/// definite in exact arithmetic for distinct centers. Throws on duplicates
/// (pairwise distance below 1e-12 of the center-set diameter).
Eigen::MatrixXd gram_matrix(const GaussianKernel& k, const std::vector<Point>& centers);

struct SolveDiagnostics {
  int n_centers = 0;
  double condition_2norm = 0.0;  ///< lambda_max / lambda_min, full spectrum
  double residual_max = 0.0;     ///< max |s(x_j) - f_j| re-checked after the solve
  bool regularization_used = false;  ///< always false: strict solves only
};

/// Fitted kernel expansion s(x) = sum c_j h(x - x_j).
class Interpolant {
 public:
  const GaussianKernel& kernel() const { return kernel_; }
  const std::vector<Point>& centers() const { return centers_; }
  const Eigen::VectorXd& coefficients() const { return coefficients_; }
  const SolveDiagnostics& diagnostics() const { return diagnostics_; }

  double evaluate(const Point& x) const;

 private:
  friend Interpolant fit_interpolant(const GaussianKernel&, std::vector<Point>,
                                     const Eigen::VectorXd&);
  GaussianKernel kernel_;
  std::vector<Point> centers_;
  Eigen::VectorXd coefficients_;
  SolveDiagnostics diagnostics_;
};

/// Solves the Gram system A c = f by Cholesky in extended precision with
/// iterative refinement, records the exact 2-norm condition number (full
/// spectrum; center counts stay small at desk scale) and the re-checked
/// residuals. No regularization: a factorization whose pivot drops below
/// 1e-14 * trace raises ConditioningError carrying the condition estimate;
/// the caller may retry at smaller degree or larger beta * diam^2.
Interpolant fit_interpolant(const GaussianKernel& k, std::vector<Point> centers,
                            const Eigen::VectorXd& values);

/// Finite combination f = sum lambda_i h(. - z_i); the computable subclass
/// of the kernel's native space.
struct KernelCombination {
  GaussianKernel kernel;
  std::vector<Point> sites;
  Eigen::VectorXd coefficients;

  double evaluate(const Point& x) const;
};

/// Native-space norm of a kernel combination: sqrt(lambda' A lambda) with
/// A the Gram matrix over the sites. Zero iff lambda = 0.
double native_norm(const KernelCombination& f);

struct SupError {
  double value = 0.0;
  Point argmax;
};

/// max |f(x) - s(x)| over the probe grid, with the maximizing point.
SupError sup_error_on_grid(const KernelCombination& f, const Interpolant& s,
                           const CenterGrid& probe);

}  // namespace gaussbound
