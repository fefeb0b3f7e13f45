#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace exlab {

/// Arbitrary-precision binary floating point value backed by MPFR.
///
/// Each value carries its own precision. Binary operations produce a result
/// at the larger of the operand precisions, so no global precision state is
/// involved and values may be used freely from several threads.
class Real {
 public:
  static constexpr mpfr_prec_t kDefaultBits = 256;

  explicit Real(mpfr_prec_t bits = kDefaultBits);
  Real(double x, mpfr_prec_t bits);
  Real(long x, mpfr_prec_t bits);
  Real(const mpz_class& x, mpfr_prec_t bits);
  Real(const mpq_class& x, mpfr_prec_t bits);
  static Real parse(const std::string& text, mpfr_prec_t bits);
  static Real from_long_double(long double x, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  /// Same value rounded to a new precision.
  Real with_bits(mpfr_prec_t bits) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  /// Decimal rendering with the given number of significant digits.
  std::string str(int digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }

  friend Real operator+(const Real& lhs, double rhs) { return lhs + Real(rhs, lhs.bits()); }
  friend Real operator-(const Real& lhs, double rhs) { return lhs - Real(rhs, lhs.bits()); }
  friend Real operator*(const Real& lhs, double rhs) { return lhs * Real(rhs, lhs.bits()); }
  friend Real operator/(const Real& lhs, double rhs) { return lhs / Real(rhs, lhs.bits()); }
  friend Real operator+(double lhs, const Real& rhs) { return Real(lhs, rhs.bits()) + rhs; }
  friend Real operator-(double lhs, const Real& rhs) { return Real(lhs, rhs.bits()) - rhs; }
  friend Real operator*(double lhs, const Real& rhs) { return Real(lhs, rhs.bits()) * rhs; }
  friend Real operator/(double lhs, const Real& rhs) { return Real(lhs, rhs.bits()) / rhs; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, double b);

  friend std::ostream& operator<<(std::ostream& os, const Real& x);

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sqrt(const Real& x);
Real abs(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real cbrt(const Real& x);
/// log Γ(x) for x > 0 (correctly rounded by MPFR).
Real lgamma(const Real& x);
Real digamma(const Real& x);

Real pi(mpfr_prec_t bits);
/// Euler's number e.
Real e_const(mpfr_prec_t bits);
/// Integer or rational literal folded exactly before rounding, e.g. rational(701, 2100, bits).
Real rational(long num, long den, mpfr_prec_t bits);

}  // namespace exlab
