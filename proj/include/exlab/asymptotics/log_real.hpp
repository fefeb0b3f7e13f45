#pragma once

#include <string>

#include "exlab/numeric/real.hpp"

namespace exlab {

/// A real number stored as sign and natural log of its magnitude.
///
/// Products, quotients and powers are exact additions in log space, so
/// quantities like k^k or Γ(3l/2) at desk scale never overflow. Addition uses
/// log-sum-exp. Every operation keeps the relative error of the represented
/// value within relative_error_budget() = 2^(-bits/2) as long as the magnitudes
/// involved stay below exp(2^(bits/2)).
class LogReal {
 public:
  explicit LogReal(mpfr_prec_t bits = Real::kDefaultBits);

  static LogReal zero(mpfr_prec_t bits = Real::kDefaultBits) { return LogReal(bits); }
  static LogReal from_log(Real log_magnitude, int sign = 1);
  static LogReal from_real(const Real& value);
  static LogReal from_double(double value, mpfr_prec_t bits = Real::kDefaultBits);

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  /// Natural log of |value|; only meaningful when sign() != 0.
  const Real& log_abs() const { return log_mag_; }
  mpfr_prec_t precision_bits() const { return log_mag_.bits(); }
  double relative_error_budget() const;

  Real to_real() const;
  /// Conversion to hardware double; saturates to ±inf or 0 outside its range.
  double to_double() const;
  std::string str(int digits) const;

  LogReal& operator*=(const LogReal& rhs);
  LogReal& operator/=(const LogReal& rhs);
  LogReal& operator+=(const LogReal& rhs);
  LogReal& operator-=(const LogReal& rhs);
  LogReal operator-() const;

  friend LogReal operator*(LogReal a, const LogReal& b) { return a *= b; }
  friend LogReal operator/(LogReal a, const LogReal& b) { return a /= b; }
  friend LogReal operator+(LogReal a, const LogReal& b) { return a += b; }
  friend LogReal operator-(LogReal a, const LogReal& b) { return a -= b; }

  /// |x|^p keeping the sign of x for positive x only; requires x > 0 unless p is 0.
  friend LogReal pow(const LogReal& x, const Real& p);

  /// a/b as a plain Real; both must be non-zero with finite logs.
  friend Real ratio(const LogReal& a, const LogReal& b);

 private:
  int sign_ = 0;
  Real log_mag_;
};

}  // namespace exlab
