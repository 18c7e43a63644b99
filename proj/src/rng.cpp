#include "gaussbound/rng.hpp"

#include <cmath>

namespace gaussbound {

Point sample_point_in_simplex(std::mt19937_64& rng, const Simplex& s) {
  const int n = s.dim();
  Eigen::VectorXd w(n + 1);
  double total = 0.0;
  for (int i = 0; i <= n; ++i) {
    w[i] = -std::log(1.0 - uniform01(rng));
    total += w[i];
  }
  w /= total;
  return s.from_barycentric(w);
}

}  // namespace gaussbound
