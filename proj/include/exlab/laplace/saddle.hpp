#pragma once

#include "exlab/asymptotics/log_real.hpp"
#include "exlab/numeric/real.hpp"

namespace exlab::laplace {

/// Parameters of the Laplace evaluation of the transition-count power sum.
/// After substituting t = 2 n^{2/3} e^z the summand exponent becomes
///   h(z) = -e^{3z}/3 + (l/2n^{2/3}) e^{2z} + (l/n^{1/3}) e^z + (a+1) z,  a = (3l+1)/2.
class SaddleProblem {
 public:
  /// Requires l >= 0 and n >= 1.
  SaddleProblem(long l, long n, mpfr_prec_t bits = Real::kDefaultBits);

  long l() const { return l_; }
  long n() const { return n_; }
  mpfr_prec_t bits() const { return a_.bits(); }
  const Real& a() const { return a_; }
  /// a + 1
  const Real& a1() const { return a1_; }
  /// l / n^{1/3}
  const Real& c1() const { return c1_; }
  /// l / n^{2/3}
  const Real& c2() const { return c2_; }

 private:
  long l_;
  long n_;
  Real a_, a1_, c1_, c2_;
};

struct HValues {
  Real h, h1, h2;
};

/// h and its first two derivatives at z. Throws NumericalError if e^{3z}
/// leaves the representable range.
HValues h_eval(const Real& z, const SaddleProblem& p);

struct SaddleSolution {
  Real z0;
  Real h_at_z0;
  Real h2_at_z0;
  Real residual;  // |h'(z0)|
  int iterations = 0;
};

/// Root of h'(z) = 0, i.e. the positive root u of
/// -u^3 + (l/n^{2/3})u^2 + (l/n^{1/3})u + (a+1) = 0 with z0 = ln u, by
/// safeguarded Newton iteration from (1/3)ln(a+1) to |h'| < 2^{-bits/2}.
/// Requires l >= 1; throws NumericalError on non-convergence.
SaddleSolution solve_saddle(const SaddleProblem& p);

/// (1/3) ln((3/2)(l+1)), the n -> ∞ saddle location.
Real limiting_z0(const SaddleProblem& p);
/// ((a+1)/3) ln(a+1) - (a+1)/3, the n -> ∞ value of h at the saddle.
Real limiting_h_at_z0(const SaddleProblem& p);

/// √(-2π/h''(z0)) e^{h(z0)}.
LogReal laplace_estimate(const SaddleProblem& p);
LogReal laplace_estimate(const SaddleSolution& s);

struct QuadratureResult {
  LogReal value;
  double relative_error = 0.0;  // quadrature error estimate, relative
  double window = 0.0;          // half-width W of the final window
  int doublings = 0;
};

/// ∫ e^{h(z)} dz over the real line, evaluated as e^{h(z0)} ∫_{z0-W}^{z0+W} e^{h(z)-h(z0)} dz
/// by adaptive Gauss-Kronrod quadrature. W starts at max(10, 8/√(-h''(z0)))
/// and doubles until the result changes by less than 1e-12 relative.
/// Requires l >= 1; throws NumericalError if the window test never passes.
QuadratureResult integral_quadrature(const SaddleProblem& p);

/// e^{h(z) - h(z0)} evaluated in extended precision without cancellation.
long double normalized_integrand(long double z, const SaddleProblem& p, const SaddleSolution& s);

/// 2^{a+1} n^{2(a+1)/3} ∫ e^h, the continuous counterpart of power_sum.
LogReal integral_form(const SaddleProblem& p);

struct PowerSumResult {
  LogReal value;
  double relative_error_bound = 0.0;
  bool direct = true;  // false when the Euler-Maclaurin route was taken
};

/// sum_{k=1}^{n} k^a exp(-k^3/24n^2 + lk^2/8n^2 + lk/2n).
///
/// Up to n = 10^7 every term is added (compensated, scaled by the running
/// maximum). Beyond that, terms more than e^-120 below the peak are replaced
/// by geometric bounds that follow from concavity of the log-summand, and the
/// remaining range is Euler-Maclaurin summed (trapezoid plus the B_2 term)
/// against an adaptive quadrature of the same summand; the reported bound
/// collects the tails, the Euler-Maclaurin remainder (1/12)∫|f''| and the
/// quadrature error.
PowerSumResult power_sum_detailed(const SaddleProblem& p);
/// As above with a custom explicit-summation limit in place of 10^7.
PowerSumResult power_sum_detailed(const SaddleProblem& p, long direct_limit);
LogReal power_sum(const SaddleProblem& p);

}  // namespace exlab::laplace
