#include "exlab/numeric/real.hpp"

#include <algorithm>
#include <ostream>

#include "exlab/errors.hpp"

namespace exlab {

namespace {

void widen_to(mpfr_ptr v, mpfr_prec_t bits) {
  if (mpfr_get_prec(v) < bits) mpfr_prec_round(v, bits, MPFR_RNDN);
}

template <typename F>
Real unary(const Real& x, F f) {
  Real out(x.bits());
  f(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(double x, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

Real::Real(long x, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, x, MPFR_RNDN);
}

Real::Real(const mpz_class& x, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& x, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
}

Real Real::parse(const std::string& text, mpfr_prec_t bits) {
  Real out(bits);
  if (mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("not a decimal number: " + text);
  }
  return out;
}

Real Real::from_long_double(long double x, mpfr_prec_t bits) {
  Real out(bits);
  mpfr_set_ld(out.v_, x, MPFR_RNDN);
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_bits(mpfr_prec_t bits) const {
  Real out(bits);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

std::string Real::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  digits = std::max(digits, 1);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  widen_to(v_, rhs.bits());
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  widen_to(v_, rhs.bits());
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  widen_to(v_, rhs.bits());
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  widen_to(v_, rhs.bits());
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.v_) || b != b) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const Real& x) {
  return os << x.str(static_cast<int>(os.precision()));
}

Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real cbrt(const Real& x) { return unary(x, mpfr_cbrt); }
Real digamma(const Real& x) { return unary(x, mpfr_digamma); }

Real lgamma(const Real& x) {
  if (x.sign() <= 0) throw DomainError("lgamma requires a positive argument");
  return unary(x, mpfr_lngamma);
}

Real pow(const Real& base, const Real& exponent) {
  Real out(std::max(base.bits(), exponent.bits()));
  mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
  return out;
}

Real pi(mpfr_prec_t bits) {
  Real out(bits);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

Real e_const(mpfr_prec_t bits) {
  Real one(1L, bits);
  return exp(one);
}

Real rational(long num, long den, mpfr_prec_t bits) {
  mpq_class q(num, den);
  q.canonicalize();
  return Real(q, bits);
}

}  // namespace exlab
