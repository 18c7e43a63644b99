#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "gaussbound/errors.hpp"
#include "gaussbound/simplex.hpp"

#include "helpers.hpp"

using gaussbound::CenterGrid;
using gaussbound::GeometryError;
using gaussbound::Point;
using gaussbound::Simplex;

namespace {

Point pt1(double x) {
  Point p(1);
  p[0] = x;
  return p;
}

Point pt2(double x, double y) {
  Point p(2);
  p[0] = x;
  p[1] = y;
  return p;
}

}  // namespace

TEST_CASE("build_simplex validates and caches the diameter") {
  const Simplex interval = Simplex::from_vertices({pt1(0.0), pt1(1.0)});
  CHECK(interval.dim() == 1);
  CHECK(interval.diameter() == doctest::Approx(1.0).epsilon(1e-15));

  const Simplex tri = Simplex::from_vertices({pt2(0, 0), pt2(1, 0), pt2(0, 1)});
  CHECK(tri.diameter() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  CHECK_THROWS_AS(Simplex::from_vertices({pt2(0, 0), pt2(1, 0), pt2(2, 0)}),
                  GeometryError);
  try {
    Simplex::from_vertices({pt2(0, 0), pt2(1, 0), pt2(2, 0)});
  } catch (const GeometryError& e) {
    CHECK(e.rank() == 1);
  }

  CHECK_THROWS_AS(Simplex::from_vertices({pt2(0, 0), pt1(1.0), pt2(0, 1)}),
                  GeometryError);
}

TEST_CASE("regular simplex realizes the requested diameter") {
  const Simplex interval = Simplex::regular(1, 0.5);
  CHECK(interval.vertices()[0][0] == doctest::Approx(0.0));
  CHECK(interval.vertices()[1][0] == doctest::Approx(0.5).epsilon(1e-15));

  const Simplex tri = Simplex::regular(2, 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK((tri.vertices()[i] - tri.vertices()[j]).norm() ==
            doctest::Approx(1.0).epsilon(1e-13));

  const Simplex tet = Simplex::regular(3, 1.0);
  int pairs = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      CHECK((tet.vertices()[i] - tet.vertices()[j]).norm() ==
            doctest::Approx(1.0).epsilon(1e-13));
      ++pairs;
    }
  CHECK(pairs == 6);

  CHECK_THROWS_AS(Simplex::regular(2, 0.0), GeometryError);
  CHECK_THROWS_AS(Simplex::regular(2, -1.0), GeometryError);
}

TEST_CASE("barycentric coordinates") {
  std::mt19937_64 rng(101);
  const Simplex tri = testutil::random_simplex(rng, 2);

  const Point mid = 0.5 * (tri.vertices()[0] + tri.vertices()[1]);
  const Eigen::VectorXd w = tri.barycentric(mid);
  CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w[2] == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

  const Eigen::VectorXd at_vertex = tri.barycentric(tri.vertices()[2]);
  CHECK(at_vertex[2] == doctest::Approx(1.0).epsilon(1e-12));

  for (int n = 1; n <= 4; ++n) {
    const Simplex s = testutil::random_simplex(rng, n);
    const Eigen::VectorXd c = s.barycentric(s.centroid());
    for (int i = 0; i <= n; ++i)
      CHECK(c[i] == doctest::Approx(1.0 / (n + 1)).epsilon(1e-12));
  }

  CHECK_THROWS_AS(tri.barycentric(pt1(0.0)), GeometryError);
}

TEST_CASE("barycentric round trip invariant") {
  std::mt19937_64 rng(202);
  for (int n = 1; n <= 3; ++n) {
    const Simplex s = testutil::random_simplex(rng, n);
    for (int trial = 0; trial < 100; ++trial) {
      const Point x = gaussbound::sample_point_in_simplex(rng, s);
      const Point back = s.from_barycentric(s.barycentric(x));
      CHECK((back - x).norm() <= 1e-10 * s.diameter());
      CHECK(std::abs(s.barycentric(x).sum() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("equally spaced grids") {
  const Simplex interval = Simplex::from_vertices({pt1(0.0), pt1(1.0)});
  const CenterGrid g2(interval, 2);
  std::multiset<double> values;
  for (const Point& p : g2.points()) values.insert(p[0]);
  CHECK(values == std::multiset<double>{0.0, 0.5, 1.0});

  const Simplex tri = Simplex::from_vertices({pt2(0, 0), pt2(1, 0), pt2(0, 1)});
  const CenterGrid g1(tri, 1);
  CHECK(g1.size() == 3);
  for (const Point& p : g1.points()) {
    bool is_vertex = false;
    for (const Point& v : tri.vertices())
      if ((p - v).norm() < 1e-14) is_vertex = true;
    CHECK(is_vertex);
  }

  CHECK(CenterGrid(tri, 3).size() == 10);
  CHECK_THROWS_AS(CenterGrid(tri, 0), GeometryError);

  // every grid point sits inside, and the index tuples sum to the degree
  const CenterGrid g3(tri, 4);
  for (std::size_t i = 0; i < g3.size(); ++i) {
    CHECK(tri.contains(g3.points()[i], 1e-12));
    int sum = 0;
    for (int k : g3.bary_indices()[i]) sum += k;
    CHECK(sum == 4);
  }
}

TEST_CASE("grid cardinality matches the polynomial space dimension") {
  std::mt19937_64 rng(303);
  for (int n = 1; n <= 4; ++n) {
    const Simplex s = testutil::random_simplex(rng, n);
    for (int l = 1; l <= 8; ++l)
      CHECK(static_cast<std::int64_t>(CenterGrid(s, l).size()) ==
            gaussbound::polynomial_space_dimension(n, l));
  }
}

TEST_CASE("polynomial space dimension") {
  CHECK(gaussbound::polynomial_space_dimension(2, 2) == 6);
  CHECK(gaussbound::polynomial_space_dimension(3, 0) == 1);
  CHECK(gaussbound::polynomial_space_dimension(7, 0) == 1);
  CHECK(gaussbound::polynomial_space_dimension(3, 4) == 35);

  CHECK_THROWS_AS(gaussbound::polynomial_space_dimension(40, 40),
                  gaussbound::OverflowError);
  // log variant keeps working where the exact one overflows
  const double log_dim = gaussbound::polynomial_space_dimension_log(40, 40);
  CHECK(log_dim == doctest::Approx(std::lgamma(81.0) - 2.0 * std::lgamma(41.0))
                       .epsilon(1e-12));
  CHECK(std::exp(gaussbound::polynomial_space_dimension_log(3, 4)) ==
        doctest::Approx(35.0).epsilon(1e-10));
}

TEST_CASE("reproduction weights: cardinal property and named reproduction") {
  const Simplex interval = Simplex::from_vertices({pt1(0.0), pt1(1.0)});
  const CenterGrid grid(interval, 2);

  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto w = gaussbound::reproduction_weights(grid, grid.points()[k]);
    for (std::size_t j = 0; j < grid.size(); ++j)
      CHECK(w.z[static_cast<Eigen::Index>(j)] ==
            doctest::Approx(j == k ? 1.0 : 0.0).scale(1.0).epsilon(1e-9));
  }

  const auto w = gaussbound::reproduction_weights(grid, pt1(0.25));
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j)
    sum_sq += w.z[static_cast<Eigen::Index>(j)] * grid.points()[j][0] * grid.points()[j][0];
  CHECK(sum_sq == doctest::Approx(0.0625).epsilon(1e-10));
  CHECK(w.x_inside);

  const auto outside = gaussbound::reproduction_weights(grid, pt1(1.5));
  CHECK_FALSE(outside.x_inside);
}

TEST_CASE("reproduction weights: classical 3-node Lebesgue maximum") {
  const Simplex interval = Simplex::from_vertices({pt1(0.0), pt1(1.0)});
  const CenterGrid grid(interval, 2);
  double max_l1 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = static_cast<double>(i) / 999.0;
    max_l1 = std::max(max_l1, gaussbound::reproduction_weights(grid, pt1(x)).l1_norm);
  }
  CHECK(max_l1 == doctest::Approx(1.25).epsilon(1e-6));
}

TEST_CASE("polynomial reproduction invariant") {
  std::mt19937_64 rng(404);
  for (int n = 1; n <= 3; ++n) {
    const Simplex s = testutil::random_simplex(rng, n);
    for (int l = 1; l <= 5; ++l) {
      const CenterGrid grid(s, l);
      for (int rep = 0; rep < 20; ++rep) {
        const testutil::Polynomial p = testutil::random_polynomial(rng, n, l);
        const Point x = gaussbound::sample_point_in_simplex(rng, s);
        const auto w = gaussbound::reproduction_weights(grid, x);
        double acc = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j)
          acc += w.z[static_cast<Eigen::Index>(j)] * p(grid.points()[j]);
        CHECK(std::abs(acc - p(x)) <= 1e-8 * (1.0 + std::abs(p(x))));
      }
    }
  }
}

TEST_CASE("Lebesgue sandwich: weight mass never exceeds the binomial cap") {
  std::mt19937_64 rng(505);
  for (int n = 1; n <= 3; ++n) {
    const Simplex s = testutil::random_simplex(rng, n);
    for (int d = 1; d <= 5; ++d) {
      const CenterGrid grid(s, d);
      const double cap = gaussbound::lebesgue_bound(d).value() * (1.0 + 1e-9);
      for (int rep = 0; rep < 20; ++rep) {
        const Point x = gaussbound::sample_point_in_simplex(rng, s);
        CHECK(gaussbound::reproduction_weights(grid, x).l1_norm <= cap);
      }
    }
  }
}

TEST_CASE("reproduction weights are rigid-motion and scale equivariant") {
  std::mt19937_64 rng(606);
  for (int n = 2; n <= 3; ++n) {
    const Simplex s = testutil::random_simplex(rng, n);
    const CenterGrid grid(s, 3);
    const Point x = gaussbound::sample_point_in_simplex(rng, s);
    const auto w = gaussbound::reproduction_weights(grid, x);

    // random rotation + shift + uniform scale
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) m.col(i) = testutil::random_point_in_box(rng, n, -1, 1);
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
    const Point shift = testutil::random_point_in_box(rng, n, -2, 2);
    const double scale = gaussbound::uniform(rng, 0.5, 2.0);
    auto transform = [&](const Point& p) -> Point { return scale * (q * p) + shift; };

    std::vector<Point> moved;
    for (const Point& v : s.vertices()) moved.push_back(transform(v));
    const Simplex s2 = Simplex::from_vertices(std::move(moved));
    const CenterGrid grid2(s2, 3);
    const auto w2 = gaussbound::reproduction_weights(grid2, transform(x));

    CHECK((w.z - w2.z).lpNorm<Eigen::Infinity>() <= 1e-8);
  }
}

TEST_CASE("lebesgue_bound values") {
  CHECK(gaussbound::lebesgue_bound(1).value() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gaussbound::lebesgue_bound(2).value() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(gaussbound::lebesgue_bound(3).value() == doctest::Approx(10.0).epsilon(1e-14));
  CHECK_THROWS(gaussbound::lebesgue_bound(0));
}
