#pragma once

#include <cstdint>
#include <random>

#include "gaussbound/simplex.hpp"

namespace gaussbound {

/// 53-bit uniform in [0, 1). Hand-rolled from the raw engine output so
/// streams do not depend on the standard library's distribution guts.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Uniform sample (w.r.t. volume) inside a simplex: iid exponentials,
/// normalized to barycentric weights.
Point sample_point_in_simplex(std::mt19937_64& rng, const Simplex& s);

}  // namespace gaussbound
