#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "gaussbound/logvalue.hpp"

namespace gaussbound {

using Point = Eigen::VectorXd;

/// An n-simplex given by n+1 affinely independent vertices in R^n.
/// Immutable after construction; the affine system for barycentric
/// coordinates is factored once and cached.
class Simplex {
 public:
  /// Validates affine independence and caches the diameter.
  static Simplex from_vertices(std::vector<Point> vertices);

  /// Regular n-simplex with all edges (and hence the diameter) equal to
  /// `diameter`, vertex 0 at the origin. Deterministic: the edge vectors are
  /// the rows of the Cholesky factor of the regular-simplex Gram matrix, so
  /// n=1 gives [0, d] and n=2 the equilateral triangle in standard position.
  static Simplex regular(int dim, double diameter);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Point>& vertices() const { return vertices_; }
  double diameter() const { return diameter_; }
  Point centroid() const;

  /// Barycentric coordinates of x: weights c with x = sum c_i v_i and
  /// sum c_i = 1. Points outside the simplex yield negative weights,
  /// returned as-is.
  Eigen::VectorXd barycentric(const Point& x) const;

  /// Cartesian point of a barycentric weight vector.
  Point from_barycentric(const Eigen::VectorXd& weights) const;

  bool contains(const Point& x, double tol = 1e-9) const;

 private:
  Simplex() = default;

  std::vector<Point> vertices_;
  double diameter_ = 0.0;
  Eigen::PartialPivLU<Eigen::MatrixXd> affine_lu_;
};

/// Equally spaced points of a given degree on a simplex: all barycentric
/// tuples (k_1/l, ..., k_{n+1}/l) with sum k_i = l, enumerated in ascending
/// lexicographic order of (k_1, ..., k_{n+1}) so output is byte-stable.
class CenterGrid {
 public:
  /// degree >= 1; the grid has exactly C(n+degree, n) points.
  CenterGrid(Simplex simplex, int degree);

  const Simplex& simplex() const { return simplex_; }
  int degree() const { return degree_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<std::vector<int>>& bary_indices() const { return bary_indices_; }
  std::size_t size() const { return points_.size(); }

 private:
  Simplex simplex_;
  int degree_ = 0;
  std::vector<Point> points_;
  std::vector<std::vector<int>> bary_indices_;
};

/// dim P_l^n = C(n+l, n) exactly; throws OverflowError when the value does
/// not fit in 64 bits (use the log variant then).
std::int64_t polynomial_space_dimension(int n, int l);

/// log C(n+l, n), safe for large arguments.
double polynomial_space_dimension_log(int n, int l);

/// Weights realizing point evaluation at x as a combination of evaluations
/// at the grid points, exact on polynomials up to the grid degree.
struct ReproductionWeights {
  Eigen::VectorXd z;      ///< one weight per grid point
  double l1_norm = 0.0;   ///< sum |z_j|
  bool x_inside = true;   ///< false flags an x outside the simplex (warning, not error)
};

/// Lagrange cardinal values at x for the grid's polynomial space. The
/// generalized Vandermonde system uses the monomial basis of total degree
/// <= grid.degree in graded-lexicographic order, assembled in local
/// coordinates centered at the simplex centroid and scaled by the diameter
/// to tame conditioning.
ReproductionWeights reproduction_weights(const CenterGrid& grid, const Point& x);

/// C(2l-1, l), the equally-spaced-points bound on the interpolation
/// projection norm; exact integer arithmetic under the hood.
LogValue lebesgue_bound(int degree);

}  // namespace gaussbound
