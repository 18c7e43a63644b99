#include "gaussbound/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gaussbound/errors.hpp"

namespace gaussbound {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLnPi = 1.1447298858494001741;
constexpr double kLn2 = std::numbers::ln2;
constexpr double kLn3 = 1.0986122886681096914;

// log(sqrt(2 pi))
const double kLogSqrt2Pi = 0.5 * (kLn2 + kLnPi);

// log rho, rho = sqrt(3)/e
const double kLogRho = 0.5 * kLn3 - 1.0;

double ln_two_plus_inv_e() { return std::log(2.0 + std::exp(-1.0)); }

void require_even_moment_order(int l) {
  if (l < 2 || l % 2 != 0)
    throw std::invalid_argument("moment order l must be a positive even integer, got " +
                                std::to_string(l));
}

}  // namespace

StirlingEnvelope stirling_envelope(int k) {
  if (k < 1 || k > 1000000)
    throw std::invalid_argument("stirling_envelope: k must be in 1..1e6");
  const double kd = k;
  StirlingEnvelope e;
  e.lower_log = kLogSqrt2Pi + kd * (-1.0) + kd * std::log(kd);
  e.upper_log = kLogSqrt2Pi + kd * (kLn3 / 6.0 - 1.0) + kd * std::log(kd);
  e.exact_log = std::lgamma(kd + 1.0);
  return e;
}

FactorialBound factorial_bound_22(int k) {
  if (k < 1 || k > 1000000)
    throw std::invalid_argument("factorial_bound_22: k must be in 1..1e6");
  const double kd = k;
  FactorialBound b;
  b.bound_log = kLogSqrt2Pi + kd * kLogRho + (kd - 1.0) * std::log(kd);
  b.exact_log = std::lgamma(kd + 1.0);
  return b;
}

double unit_ball_volume_log(int n) {
  if (n < 1) throw std::invalid_argument("unit_ball_volume: n >= 1");
  return 0.5 * n * kLnPi - std::lgamma(0.5 * n + 1.0);
}

double unit_ball_volume(int n) { return std::exp(unit_ball_volume_log(n)); }

double moment_exact_log(int n, int l, double beta) {
  if (n < 1) throw std::invalid_argument("moment_exact: n >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("moment_exact: beta > 0");
  require_even_moment_order(l);
  const double ln_beta = std::log(beta);
  return 0.5 * n * (kLnPi - ln_beta) + std::log(static_cast<double>(n)) +
         unit_ball_volume_log(n) + (l + n) * (kLn2 + 0.5 * ln_beta) +
         std::lgamma(0.5 * (l + n)) - kLn2;
}

double moment_upper_bound_log(int n, int l, double beta) {
  if (n < 1) throw std::invalid_argument("moment_upper_bound: n >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("moment_upper_bound: beta > 0");
  require_even_moment_order(l);
  const double common = 0.5 * (n + 1) * kLnPi + std::log(static_cast<double>(n)) +
                        unit_ball_volume_log(n) + 0.5 * l * std::log(beta);
  if (n % 2 == 1) {
    return common + 0.5 * (l + n + 2) * kLn2 + 0.5 * (l + n - 1) * kLogRho +
           0.5 * (l + n - 3) * std::log(static_cast<double>(l + n - 1)) +
           ln_two_plus_inv_e();
  }
  return common + 0.5 * (l + n + 3) * kLn2 + 0.5 * (l + n - 2) * kLogRho +
         0.5 * (l + n - 4) * std::log(static_cast<double>(l + n - 2));
}

double cl_coefficient_log(int n, int l, double beta) {
  if (l < 1) throw std::invalid_argument("cl_coefficient: l >= 1");
  return 0.5 * moment_exact_log(n, 2 * l, beta) - std::lgamma(l + 1.0);
}

TheoremConstants theorem_constants(int n, double beta, double b0) {
  if (n < 1) throw std::invalid_argument("theorem_constants: n >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("theorem_constants: beta > 0");
  if (!(b0 > 0.0)) throw std::invalid_argument("theorem_constants: b0 > 0");

  TheoremConstants tc;
  tc.n = n;
  tc.beta = beta;
  tc.b0 = b0;

  tc.rho = LogValue::from_log(kLogRho);
  tc.rho1 = LogValue::from_log(-1.0);
  tc.rho2 = LogValue::from_log(kLn3 / 6.0 - 1.0);
  // rho3 = 12^(1/4) sqrt(e beta)
  const double log_rho3 = 0.25 * std::log(12.0) + 0.5 * (1.0 + std::log(beta));
  tc.rho3 = LogValue::from_log(log_rho3);
  tc.alpha_n = LogValue::from_log(unit_ball_volume_log(n));

  // c2 = rho3^4 * 3^3 * 2^7 * b0^3; no n anywhere, so the value is
  // bit-identical across dimensions.
  const double log_c2 = 4.0 * log_rho3 + std::log(3456.0) + 3.0 * std::log(b0);
  tc.c2 = LogValue::from_log(log_c2);
  tc.delta0 = std::min(b0, std::exp(-log_c2));
  tc.c3_value = b0 / 4.0;
  tc.c3 = LogValue::from_value(tc.c3_value);

  const double half_log_nan = 0.5 * (std::log(static_cast<double>(n)) +
                                     unit_ball_volume_log(n));
  double log_dpp;
  if (n % 2 == 1) {
    log_dpp = 0.5 * ln_two_plus_inv_e() + 0.25 * (n - 1) * kLnPi + half_log_nan +
              0.25 * n * kLn2 + 0.25 * (n - 1) * kLogRho;
  } else {
    log_dpp = 0.25 * (n - 1) * kLnPi + half_log_nan + 0.25 * (n + 1) * kLn2 +
              0.25 * (n - 2) * kLogRho;
  }
  tc.delta_dprime = LogValue::from_log(log_dpp);
  // The theorem lists the same c1 expression for both parities; the parity
  // lives entirely in Delta''.
  tc.c1 = LogValue::from_log(log_dpp - 0.5 * std::log(16.0 * kPi) - 0.5 * std::log(b0));
  return tc;
}

LogValue bound_value_log(const TheoremConstants& tc, double delta, double norm_f) {
  if (!(delta > 0.0))
    throw std::invalid_argument("bound_value: delta must be positive");
  if (delta > tc.delta0)
    throw AdmissibilityError("bound_value: delta " + std::to_string(delta) +
                                 " exceeds delta0 " + std::to_string(tc.delta0),
                             delta, tc.delta0);
  if (!(norm_f >= 0.0))
    throw std::invalid_argument("bound_value: norm_f must be nonnegative");
  if (norm_f == 0.0) return LogValue::zero();
  const double log_delta = std::log(delta);
  const double log_b = tc.c1.log() + 0.5 * log_delta +
                       (tc.c3_value / delta) * (tc.c2.log() + log_delta) +
                       std::log(norm_f);
  return LogValue::from_log(log_b);
}

double bound_value(const TheoremConstants& tc, double delta, double norm_f) {
  return bound_value_log(tc, delta, norm_f).value();
}

BigInt gamma_sequence(int n) {
  if (n < 1) throw std::invalid_argument("gamma_sequence: n >= 1");
  BigInt g = 2;
  for (int i = 2; i <= n; ++i) g = 2 * i * (1 + g);
  return g;
}

LegacyConstants legacy_constants(int n, double beta, double b0) {
  const TheoremConstants tc = theorem_constants(n, beta, b0);

  LegacyConstants lc;
  lc.n = n;
  lc.beta = beta;
  lc.b0 = b0;
  lc.gamma_n = gamma_sequence(n);
  lc.a1 = tc.c1;

  // The e^(8 n gamma_n) factor inside a2^... overflows any fixed-width
  // float already at n = 2; the whole product stays in log space.
  const double gamma_d = static_cast<double>(lc.gamma_n);
  const double inner = 0.75 * kLn3 + 1.0 + 0.5 * std::log(2.0 * std::exp(kLogRho) * beta) +
                       0.5 * std::log(static_cast<double>(n)) + 2.0 * n * gamma_d;
  lc.a2 = LogValue::from_log(4.0 * inner + 3.0 * std::log(b0) + log_big(lc.gamma_n));
  lc.a3 = b0 / (8.0 * gamma_d);
  return lc;
}

LogValue legacy_bound_log(const LegacyConstants& lc, double delta, double norm_f) {
  if (!(delta > 0.0))
    throw std::invalid_argument("legacy_bound: delta must be positive");
  if (norm_f == 0.0) return LogValue::zero();
  const double log_b = lc.a1.log() +
                       (lc.a3 / delta) * (lc.a2.log() + std::log(delta)) +
                       std::log(norm_f);
  return LogValue::from_log(log_b);
}

BoundComparison compare_bounds(int n, double beta, double b0) {
  const TheoremConstants tc = theorem_constants(n, beta, b0);
  const LegacyConstants lc = legacy_constants(n, beta, b0);

  BoundComparison cmp;
  cmp.n = n;
  cmp.beta = beta;
  cmp.b0 = b0;
  cmp.log_c2 = tc.c2.log();
  cmp.log_a2 = lc.a2.log();
  cmp.c3 = tc.c3_value;
  cmp.a3 = lc.a3;
  cmp.log_ratio_a2_c2 = cmp.log_a2 - cmp.log_c2;
  // c3/a3 = (b0/4) / (b0/(8 gamma_n)) = 2 gamma_n identically.
  cmp.c3_over_a3 = 2.0 * static_cast<double>(lc.gamma_n);
  cmp.improvement = cmp.log_a2 > cmp.log_c2 && cmp.c3 > cmp.a3;
  cmp.a1_equals_c1_assumed = true;
  return cmp;
}

}  // namespace gaussbound
