#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>

namespace gaussbound {

using BigInt = boost::multiprecision::cpp_int;

/// Signed magnitude in log space: value = sign * exp(log_abs).
///
/// The legacy constant a2 contains an e^{8 n gamma_n} factor that overflows
/// every fixed-width float already at n = 2, so every constant in the bound
/// pipeline is carried in this representation and only converted to a plain
/// double on demand.
class LogValue {
 public:
  LogValue() : sign_(0), log_abs_(-std::numeric_limits<double>::infinity()) {}

  static LogValue zero() { return LogValue(); }
  static LogValue one() { return from_log(0.0); }

  static LogValue from_value(double v) {
    if (v == 0.0) return zero();
    LogValue r;
    r.sign_ = v > 0 ? 1 : -1;
    r.log_abs_ = std::log(std::abs(v));
    return r;
  }

  /// A positive value given by its natural log.
  static LogValue from_log(double log_abs) {
    LogValue r;
    r.sign_ = 1;
    r.log_abs_ = log_abs;
    return r;
  }

  static LogValue from_log(int sign, double log_abs) {
    if (sign == 0) return zero();
    LogValue r;
    r.sign_ = sign > 0 ? 1 : -1;
    r.log_abs_ = log_abs;
    return r;
  }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }

  /// Natural log of |value|; -inf for zero.
  double log_abs() const { return log_abs_; }

  /// Natural log of a value known to be positive.
  double log() const { return log_abs_; }

  /// Convert back to double; overflows to +-inf, underflows to 0.
  double value() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::exp(log_abs_);
  }

  LogValue operator*(const LogValue& o) const {
    if (sign_ == 0 || o.sign_ == 0) return zero();
    return from_log(sign_ * o.sign_, log_abs_ + o.log_abs_);
  }

  LogValue operator/(const LogValue& o) const {
    if (sign_ == 0) return zero();
    return from_log(sign_ * o.sign_, log_abs_ - o.log_abs_);
  }

  LogValue operator+(const LogValue& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    double hi = std::max(log_abs_, o.log_abs_);
    double lo = std::min(log_abs_, o.log_abs_);
    if (sign_ == o.sign_)
      return from_log(sign_, hi + std::log1p(std::exp(lo - hi)));
    if (log_abs_ == o.log_abs_) return zero();
    int s = (log_abs_ > o.log_abs_) ? sign_ : o.sign_;
    return from_log(s, hi + std::log1p(-std::exp(lo - hi)));
  }

  LogValue operator-(const LogValue& o) const {
    return *this + from_log(-o.sign_, o.log_abs_);
  }

  /// Real power of a nonnegative value.
  LogValue pow(double e) const {
    if (sign_ == 0) return zero();
    return from_log(sign_, log_abs_ * e);
  }

  LogValue sqrt() const { return pow(0.5); }

  bool operator<(const LogValue& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    if (sign_ == 0) return false;
    return sign_ > 0 ? log_abs_ < o.log_abs_ : log_abs_ > o.log_abs_;
  }
  bool operator>(const LogValue& o) const { return o < *this; }

 private:
  int sign_;
  double log_abs_;
};

/// k! as an exact arbitrary-precision integer.
BigInt factorial_exact(int k);

/// C(n, k) exactly.
BigInt binomial_exact(std::int64_t n, std::int64_t k);

/// Natural log of a positive big integer (via 50-digit float).
double log_big(const BigInt& v);

}  // namespace gaussbound
