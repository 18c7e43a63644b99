#pragma once

#include "gaussbound/logvalue.hpp"

namespace gaussbound {

/// Factorial envelope sqrt(2 pi) rho1^k k^k <= k! <= sqrt(2 pi) rho2^k k^k
/// with rho1 = 1/e, rho2 = 3^(1/6)/e. Everything in natural-log space;
/// exact_log comes from log-Gamma, independent of the envelope formulas.
///
/// The upper inequality is numerically false at k = 2 and k = 3; the suite
/// asserts the documented failures instead of papering over them.
struct StirlingEnvelope {
  double lower_log = 0.0;
  double upper_log = 0.0;
  double exact_log = 0.0;
};
StirlingEnvelope stirling_envelope(int k);

/// k! <= sqrt(2 pi) rho^k k^(k-1) with rho = sqrt(3)/e (false at k = 3).
struct FactorialBound {
  double bound_log = 0.0;
  double exact_log = 0.0;
};
FactorialBound factorial_bound_22(int k);

/// Volume of the unit ball in R^n.
double unit_ball_volume(int n);
double unit_ball_volume_log(int n);

/// log of the l-th absolute moment of the Gaussian-induced measure
/// d mu = (pi/beta)^(n/2) exp(-|xi|^2 / (4 beta)) d xi, closed Gamma form:
/// (pi/beta)^(n/2) n alpha_n (2 sqrt(beta))^(l+n) Gamma((l+n)/2) / 2.
/// Requires even l >= 2.
double moment_exact_log(int n, int l, double beta);

/// log of the stated moment bound; dispatches on the parity of n.
/// Exceeded by the exact moment when n is even and l + n = 8 (the k = 3
/// factorial-bound failure propagates), by the factor 1.02806...
double moment_upper_bound_log(int n, int l, double beta);

/// log c_l, c_l = { integral |xi|^(2l) / (l!)^2 d mu }^(1/2), l >= 1.
double cl_coefficient_log(int n, int l, double beta);

/// The constants of the improved bound |f(x)-s(x)| <= c1 sqrt(delta)
/// (c2 delta)^(c3/delta) ||f||_h. c2, c3, delta0 do not depend on n.
struct TheoremConstants {
  int n = 1;
  double beta = 1.0;
  double b0 = 1.0;

  LogValue rho;           ///< sqrt(3)/e
  LogValue rho1;          ///< 1/e
  LogValue rho2;          ///< 3^(1/6)/e
  LogValue rho3;          ///< 12^(1/4) sqrt(e beta)
  LogValue alpha_n;       ///< unit ball volume
  LogValue delta_dprime;  ///< parity-dependent Delta''
  LogValue c1;            ///< Delta'' / sqrt(16 pi) / sqrt(b0)
  LogValue c2;            ///< rho3^4 * 3^3 * 2^7 * b0^3
  LogValue c3;            ///< b0 / 4

  double delta0 = 0.0;    ///< min{ b0, 1/c2 }
  double c3_value = 0.0;  ///< b0 / 4, exact in doubles
};
TheoremConstants theorem_constants(int n, double beta, double b0);

/// Bound as a log-space value; zero for norm_f = 0. Requires 0 < delta
/// <= delta0 (AdmissibilityError otherwise).
LogValue bound_value_log(const TheoremConstants& tc, double delta, double norm_f);

/// c1 sqrt(delta) (c2 delta)^(c3/delta) norm_f, exponentiated from the log
/// form (underflows to 0 for extreme delta0 regimes).
double bound_value(const TheoremConstants& tc, double delta, double norm_f);

/// gamma_1 = 2, gamma_n = 2n(1 + gamma_{n-1}); exact integers.
BigInt gamma_sequence(int n);

/// The older constants: a2 = (3^(3/4) e sqrt(2 rho beta) sqrt(n)
/// e^(2 n gamma_n))^4 b0^3 gamma_n and a3 = b0 / (8 gamma_n); a1 is taken
/// equal to c1 (an assumption, recorded in every comparison).
struct LegacyConstants {
  int n = 1;
  double beta = 1.0;
  double b0 = 1.0;
  BigInt gamma_n;
  LogValue a1;
  LogValue a2;
  double a3 = 0.0;
};
LegacyConstants legacy_constants(int n, double beta, double b0);

/// a1 (a2 delta)^(a3/delta) norm_f in log space (no admissibility gate;
/// the legacy bound is evaluated wherever the new one is, for comparison).
LogValue legacy_bound_log(const LegacyConstants& lc, double delta, double norm_f);

/// Side-by-side record for the dimension sweep. c3_over_a3 is emitted in
/// its cancelled form 2 gamma_n, which the ratio equals identically.
struct BoundComparison {
  int n = 1;
  double beta = 1.0;
  double b0 = 1.0;
  double log_c2 = 0.0;
  double log_a2 = 0.0;
  double c3 = 0.0;
  double a3 = 0.0;
  double log_ratio_a2_c2 = 0.0;
  double c3_over_a3 = 0.0;
  bool improvement = false;        ///< log a2 > log c2 and c3 > a3
  bool a1_equals_c1_assumed = true;
};
BoundComparison compare_bounds(int n, double beta, double b0);

}  // namespace gaussbound
