#include "gaussbound/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "gaussbound/errors.hpp"

namespace gaussbound {

namespace {

double max_pairwise_distance(const std::vector<Point>& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, (pts[i] - pts[j]).norm());
  return best;
}

// All exponent tuples of total degree <= degree in n variables,
// graded-lexicographic: degree ascending, ties broken lexicographically
// with the first variable dominant.
std::vector<Eigen::VectorXi> monomial_exponents(int n, int degree) {
  std::vector<Eigen::VectorXi> out;
  Eigen::VectorXi current = Eigen::VectorXi::Zero(n);
  for (int d = 0; d <= degree; ++d) {
    // enumerate compositions of d into n parts, first part descending
    std::vector<Eigen::VectorXi> level;
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
      if (pos == n - 1) {
        current[pos] = remaining;
        level.push_back(current);
        return;
      }
      for (int k = remaining; k >= 0; --k) {
        current[pos] = k;
        rec(pos + 1, remaining - k);
      }
    };
    rec(0, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

double eval_monomial(const Eigen::VectorXi& alpha, const Point& u) {
  double r = 1.0;
  for (int i = 0; i < alpha.size(); ++i)
    for (int k = 0; k < alpha[i]; ++k) r *= u[i];
  return r;
}

}  // namespace

Simplex Simplex::from_vertices(std::vector<Point> vertices) {
  if (vertices.size() < 2)
    throw GeometryError("simplex needs at least 2 vertices");
  const int n = static_cast<int>(vertices.size()) - 1;
  for (const Point& v : vertices)
    if (v.size() != n)
      throw GeometryError("simplex in R^" + std::to_string(n) + " needs " +
                          std::to_string(n) + "-dimensional vertices, got " +
                          std::to_string(v.size()));

  // Affine independence: the n edge vectors from vertex 0 must span R^n.
  Eigen::MatrixXd edges(n, n);
  for (int i = 0; i < n; ++i) edges.col(i) = vertices[i + 1] - vertices[0];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(edges);
  qr.setThreshold(1e-12);
  const int rank = static_cast<int>(qr.rank());
  if (rank < n)
    throw GeometryError("degenerate simplex: edge vectors have rank " +
                            std::to_string(rank) + " < " + std::to_string(n),
                        rank);

  Simplex s;
  s.vertices_ = std::move(vertices);
  s.diameter_ = max_pairwise_distance(s.vertices_);

  // Affine system for barycentric coordinates: first row all ones,
  // remaining rows are the vertex coordinates by column.
  Eigen::MatrixXd m(n + 1, n + 1);
  m.row(0).setOnes();
  for (int j = 0; j <= n; ++j) m.col(j).tail(n) = s.vertices_[j];
  s.affine_lu_ = Eigen::PartialPivLU<Eigen::MatrixXd>(m);
  return s;
}

Simplex Simplex::regular(int dim, double diameter) {
  if (dim < 1) throw GeometryError("regular simplex needs dim >= 1");
  if (!(diameter > 0.0))
    throw GeometryError("regular simplex needs a positive diameter");

  // Edge vectors u_i = v_i - v_0 of a regular simplex with edge s satisfy
  // <u_i, u_j> = s^2 (1 + delta_ij) / 2; take them as rows of the Cholesky
  // factor of that Gram matrix. All pairwise distances equal s = diameter.
  Eigen::MatrixXd gram =
      0.5 * diameter * diameter *
      (Eigen::MatrixXd::Identity(dim, dim) + Eigen::MatrixXd::Ones(dim, dim));
  Eigen::MatrixXd chol = Eigen::LLT<Eigen::MatrixXd>(gram).matrixL();

  std::vector<Point> vertices;
  vertices.reserve(dim + 1);
  vertices.push_back(Point::Zero(dim));
  for (int i = 0; i < dim; ++i) vertices.push_back(chol.row(i).transpose());
  return from_vertices(std::move(vertices));
}

Point Simplex::centroid() const {
  Point c = Point::Zero(dim());
  for (const Point& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

Eigen::VectorXd Simplex::barycentric(const Point& x) const {
  const int n = dim();
  if (x.size() != n)
    throw GeometryError("barycentric: point dimension " +
                        std::to_string(x.size()) + " != simplex dimension " +
                        std::to_string(n));
  Eigen::VectorXd rhs(n + 1);
  rhs[0] = 1.0;
  rhs.tail(n) = x;
  return affine_lu_.solve(rhs);
}

Point Simplex::from_barycentric(const Eigen::VectorXd& weights) const {
  if (weights.size() != dim() + 1)
    throw GeometryError("from_barycentric: weight count mismatch");
  Point x = Point::Zero(dim());
  for (int i = 0; i <= dim(); ++i) x += weights[i] * vertices_[i];
  return x;
}

bool Simplex::contains(const Point& x, double tol) const {
  return (barycentric(x).array() >= -tol).all();
}

CenterGrid::CenterGrid(Simplex simplex, int degree)
    : simplex_(std::move(simplex)), degree_(degree) {
  if (degree < 1)
    throw GeometryError(
        "center grid degree must be >= 1 (degree 0 has no grid)");
  const int n = simplex_.dim();
  const double l = static_cast<double>(degree);

  std::vector<int> tuple(n + 1, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n) {
      tuple[pos] = remaining;
      bary_indices_.push_back(tuple);
      Eigen::VectorXd w(n + 1);
      for (int i = 0; i <= n; ++i) w[i] = tuple[i] / l;
      points_.push_back(simplex_.from_barycentric(w));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      tuple[pos] = k;
      rec(pos + 1, remaining - k);
    }
  };
  rec(0, degree);

  const std::int64_t expected = polynomial_space_dimension(n, degree);
  if (static_cast<std::int64_t>(points_.size()) != expected)
    throw GeometryError("center grid enumeration bug: got " +
                        std::to_string(points_.size()) + " points, expected " +
                        std::to_string(expected));
}

std::int64_t polynomial_space_dimension(int n, int l) {
  if (n < 1 || l < 0)
    throw std::invalid_argument("polynomial_space_dimension: n >= 1, l >= 0");
  const BigInt v = binomial_exact(static_cast<std::int64_t>(n) + l, n);
  if (v > std::numeric_limits<std::int64_t>::max())
    throw OverflowError(
        "polynomial_space_dimension overflows int64; use the log variant");
  return static_cast<std::int64_t>(v);
}

double polynomial_space_dimension_log(int n, int l) {
  if (n < 1 || l < 0)
    throw std::invalid_argument("polynomial_space_dimension_log: n >= 1, l >= 0");
  const double a = static_cast<double>(n) + l;
  return std::lgamma(a + 1.0) - std::lgamma(n + 1.0) - std::lgamma(l + 1.0);
}

ReproductionWeights reproduction_weights(const CenterGrid& grid, const Point& x) {
  const Simplex& s = grid.simplex();
  const int n = s.dim();
  if (x.size() != n) throw GeometryError("reproduction_weights: dimension mismatch");

  const auto exponents = monomial_exponents(n, grid.degree());
  const auto N = static_cast<Eigen::Index>(grid.size());
  if (static_cast<Eigen::Index>(exponents.size()) != N)
    throw GeometryError("reproduction_weights: basis/grid size mismatch");

  // Local coordinates: centroid-centered, diameter-scaled.
  const Point c = s.centroid();
  const double scale = s.diameter();

  Eigen::MatrixXd vt(N, N);  // Vandermonde transpose: rows = monomials
  for (Eigen::Index j = 0; j < N; ++j) {
    const Point u = (grid.points()[j] - c) / scale;
    for (Eigen::Index i = 0; i < N; ++i) vt(i, j) = eval_monomial(exponents[i], u);
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(vt);
  const auto& r = qr.matrixR();
  const double pivot_max = std::abs(r(0, 0));
  const double pivot_min = std::abs(r(N - 1, N - 1));
  if (!(pivot_min > 1e-13 * pivot_max))
    throw ConditioningError(
        "reproduction weights: Vandermonde numerically singular at degree " +
            std::to_string(grid.degree()) + ", n " + std::to_string(n) +
            " (relative pivot " + std::to_string(pivot_min / pivot_max) + ")",
        pivot_max / std::max(pivot_min, std::numeric_limits<double>::min()));

  Eigen::VectorXd mx(N);
  const Point ux = (x - c) / scale;
  for (Eigen::Index i = 0; i < N; ++i) mx[i] = eval_monomial(exponents[i], ux);

  ReproductionWeights w;
  w.z = qr.solve(mx);
  w.l1_norm = w.z.lpNorm<1>();
  w.x_inside = s.contains(x);
  return w;
}

LogValue lebesgue_bound(int degree) {
  if (degree < 1) throw std::invalid_argument("lebesgue_bound: degree >= 1");
  return LogValue::from_log(
      log_big(binomial_exact(2 * static_cast<std::int64_t>(degree) - 1, degree)));
}

}  // namespace gaussbound
