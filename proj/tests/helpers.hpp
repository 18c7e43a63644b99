#pragma once

// Shared test utilities. Oracles here stay independent of the library
// implementation paths they check: polynomials are evaluated over global
// coordinates (the library's reproduction weights use centered, scaled
// local coordinates), and the quadrature knows nothing about Gamma.

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "gaussbound/constants.hpp"
#include "gaussbound/rng.hpp"
#include "gaussbound/simplex.hpp"

namespace testutil {

using gaussbound::Point;

inline Point random_point_in_box(std::mt19937_64& rng, int n, double lo, double hi) {
  Point p(n);
  for (int i = 0; i < n; ++i) p[i] = gaussbound::uniform(rng, lo, hi);
  return p;
}

/// Random non-degenerate simplex with vertices in the unit box; resamples
/// until the edge matrix is comfortably full rank.
inline gaussbound::Simplex random_simplex(std::mt19937_64& rng, int n) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> vertices;
    for (int i = 0; i <= n; ++i) vertices.push_back(random_point_in_box(rng, n, 0.0, 1.0));
    Eigen::MatrixXd edges(n, n);
    for (int i = 0; i < n; ++i) edges.col(i) = vertices[i + 1] - vertices[0];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges);
    if (svd.singularValues().minCoeff() > 0.15)
      return gaussbound::Simplex::from_vertices(std::move(vertices));
  }
  throw std::runtime_error("random_simplex: could not draw a well-shaped simplex");
}

/// Dense polynomial over global coordinates.
struct Polynomial {
  std::vector<Eigen::VectorXi> exponents;
  std::vector<double> coefficients;

  double operator()(const Point& x) const {
    double acc = 0.0;
    for (std::size_t t = 0; t < exponents.size(); ++t) {
      double m = coefficients[t];
      for (int i = 0; i < x.size(); ++i)
        for (int k = 0; k < exponents[t][i]; ++k) m *= x[i];
      acc += m;
    }
    return acc;
  }
};

/// All exponent tuples with |alpha| <= degree, ascending-lex enumeration
/// (deliberately not the library's graded order).
inline std::vector<Eigen::VectorXi> all_exponents(int n, int degree) {
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi cur = Eigen::VectorXi::Zero(n);
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= budget; ++k) {
      cur[pos] = k;
      rec(pos + 1, budget - k);
    }
    cur[pos] = 0;
  };
  rec(0, degree);
  return out;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int n, int degree) {
  Polynomial p;
  p.exponents = all_exponents(n, degree);
  for (std::size_t t = 0; t < p.exponents.size(); ++t)
    p.coefficients.push_back(gaussbound::uniform(rng, -1.0, 1.0));
  return p;
}

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature to an absolute tolerance.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = detail::simpson(f, a, b, fa, fm, fb);
  return detail::adaptive_step(f, a, b, fa, fm, fb, whole, tol, 50);
}

/// Independent oracle for the Gaussian-measure moments: the radial integral
/// (pi/beta)^(n/2) n alpha_n INT_0^inf r^(l+n-1) exp(-r^2/(4 beta)) dr done
/// by quadrature after the substitution r = 2 sqrt(beta) s.
inline double moment_by_quadrature(int n, int l, double beta) {
  const double log_prefactor = 0.5 * n * std::log(M_PI / beta) +
                               std::log(static_cast<double>(n)) +
                               gaussbound::unit_ball_volume_log(n) +
                               (l + n) * std::log(2.0 * std::sqrt(beta));
  auto integrand = [&](double s) { return std::pow(s, l + n - 1) * std::exp(-s * s); };
  // Two passes: a rough size estimate, then an absolute tolerance pinned
  // well below the 1e-9 relative agreement the suite asserts.
  const double rough = adaptive_simpson(integrand, 0.0, 12.0, 1e-6);
  const double radial =
      adaptive_simpson(integrand, 0.0, 12.0, std::max(1e-13, 1e-12 * std::abs(rough)));
  return log_prefactor + std::log(radial);
}

}  // namespace testutil
