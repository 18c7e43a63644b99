#include "gaussbound/logvalue.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

namespace gaussbound {

BigInt factorial_exact(int k) {
  if (k < 0) throw std::invalid_argument("factorial_exact: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

BigInt binomial_exact(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step: r is a running binomial
  }
  return r;
}

double log_big(const BigInt& v) {
  if (v <= 0) throw std::invalid_argument("log_big: argument must be positive");
  using BF = boost::multiprecision::cpp_bin_float_50;
  return static_cast<double>(log(BF(v)));
}

}  // namespace gaussbound
