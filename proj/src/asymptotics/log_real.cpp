#include "exlab/asymptotics/log_real.hpp"

#include <cmath>

#include "exlab/errors.hpp"

namespace exlab {

LogReal::LogReal(mpfr_prec_t bits) : sign_(0), log_mag_(bits) {}

LogReal LogReal::from_log(Real log_magnitude, int sign) {
  if (!log_magnitude.is_finite()) {
    if (log_magnitude.sign() < 0) return LogReal(log_magnitude.bits());
    throw NumericalError("LogReal magnitude overflow");
  }
  LogReal out(log_magnitude.bits());
  out.sign_ = sign > 0 ? 1 : (sign < 0 ? -1 : 0);
  out.log_mag_ = std::move(log_magnitude);
  return out;
}

LogReal LogReal::from_real(const Real& value) {
  if (value.is_zero()) return LogReal(value.bits());
  return from_log(log(abs(value)), value.sign());
}

LogReal LogReal::from_double(double value, mpfr_prec_t bits) {
  return from_real(Real(value, bits));
}

double LogReal::relative_error_budget() const {
  return std::ldexp(1.0, -static_cast<int>(precision_bits() / 2));
}

Real LogReal::to_real() const {
  if (sign_ == 0) return Real(precision_bits());
  Real v = exp(log_mag_);
  return sign_ < 0 ? -v : v;
}

double LogReal::to_double() const {
  if (sign_ == 0) return 0.0;
  const double lm = log_mag_.to_double();
  if (lm > 709.8) return sign_ * HUGE_VAL;
  if (lm < -745.2) return 0.0;
  return to_real().to_double();
}

std::string LogReal::str(int digits) const { return to_real().str(digits); }

LogReal& LogReal::operator*=(const LogReal& rhs) {
  if (sign_ == 0 || rhs.sign_ == 0) {
    sign_ = 0;
    return *this;
  }
  sign_ *= rhs.sign_;
  log_mag_ += rhs.log_mag_;
  return *this;
}

LogReal& LogReal::operator/=(const LogReal& rhs) {
  if (rhs.sign_ == 0) throw NumericalError("LogReal division by zero");
  if (sign_ == 0) return *this;
  sign_ *= rhs.sign_;
  log_mag_ -= rhs.log_mag_;
  return *this;
}

LogReal& LogReal::operator+=(const LogReal& rhs) {
  if (rhs.sign_ == 0) return *this;
  if (sign_ == 0) {
    const auto bits = std::max(precision_bits(), rhs.precision_bits());
    *this = rhs;
    log_mag_ = log_mag_.with_bits(bits);
    return *this;
  }
  // log(|x| ± |y|) = L + log1p(±exp(l - L)) with L the larger log.
  const bool this_larger = log_mag_ >= rhs.log_mag_;
  const Real& big = this_larger ? log_mag_ : rhs.log_mag_;
  const Real& small = this_larger ? rhs.log_mag_ : log_mag_;
  const int big_sign = this_larger ? sign_ : rhs.sign_;
  Real t = exp(small - big);
  if (sign_ == rhs.sign_) {
    log_mag_ = big + log1p(t);
    sign_ = big_sign;
    return *this;
  }
  if (t == 1.0) {
    sign_ = 0;
    log_mag_ = Real(log_mag_.bits());
    return *this;
  }
  log_mag_ = big + log1p(-t);
  sign_ = big_sign;
  return *this;
}

LogReal& LogReal::operator-=(const LogReal& rhs) { return *this += -rhs; }

LogReal LogReal::operator-() const {
  LogReal out = *this;
  out.sign_ = -sign_;
  return out;
}

LogReal pow(const LogReal& x, const Real& p) {
  if (p.is_zero()) return LogReal::from_log(Real(p.bits()), 1);
  if (x.sign_ <= 0) throw DomainError("LogReal pow requires a positive base");
  return LogReal::from_log(x.log_mag_ * p, 1);
}

Real ratio(const LogReal& a, const LogReal& b) {
  if (a.sign_ == 0 || b.sign_ == 0) throw NumericalError("ratio of zero LogReal");
  Real r = exp(a.log_mag_ - b.log_mag_);
  return a.sign_ * b.sign_ < 0 ? -r : r;
}

}  // namespace exlab
