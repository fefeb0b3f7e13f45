#pragma once

#include <array>
#include <string_view>

#include <gmpxx.h>

#include "exlab/asymptotics/log_real.hpp"

namespace exlab::asymptotics {

/// Correction constants of the Bender-Canfield-McKay expansion and the
/// leading Wright-coefficient data. Only r_1..r_4 are known.
struct WrightConstants {
  static const std::array<mpq_class, 4>& r();
  /// Leading term of d_l, 1/(2π).
  static Real d_leading(mpfr_prec_t bits);
  /// w_0 = π/√6.
  static Real w0(mpfr_prec_t bits);
};

/// Big-O claim that accompanies a closed-form estimate.
enum class ErrorOrder {
  kExact,
  kOneOverL,
  kBcmUniform,
  kTransitionApprox,
  kPowerSumLimit,
  kSaddleLocation,
  kSaddleValue,
  kLaplaceLeading,
  kVertexCount,
};

std::string_view error_order_tag(ErrorOrder order);

struct AsymptoticEstimate {
  LogReal value;
  ErrorOrder claimed_error_order = ErrorOrder::kExact;

  std::string_view tag() const { return error_order_tag(claimed_error_order); }
  double to_double() const { return value.to_double(); }
};

enum class RhoMode { kLeading, kViaW };

/// ρ_l: (1/2)√(3/π)(e/12l)^{l/2} in leading mode; via_w replaces 1/2 by w_l/2.
AsymptoticEstimate rho(long l, RhoMode mode = RhoMode::kLeading,
                       mpfr_prec_t bits = Real::kDefaultBits);

/// Wright coefficient w_l with d_l truncated to 1/(2π); w_0 = π/√6 exactly.
AsymptoticEstimate wright_w(long l, mpfr_prec_t bits = Real::kDefaultBits);

/// BCM estimate of c(k, k+l) keeping the correction sum up to r_{terms-2}.
/// Requires k >= 2, l >= 1 and 2 <= terms <= 6.
AsymptoticEstimate c_bcm(long k, long l, int terms, mpfr_prec_t bits = Real::kDefaultBits);

/// Approximation of α(l;k): (1/2) ρ_l k^{(3l+1)/2}/n^{l+1} exp(-k^3/24n^2 + lk^2/8n^2 + lk/2n).
AsymptoticEstimate alpha_approx(long n, long l, long k, mpfr_prec_t bits = Real::kDefaultBits);

/// Closed form 2^{a+1} 3^{(a-2)/3} Γ((a+1)/3) n^{2(a+1)/3} of the power sum, a = (3l+1)/2.
AsymptoticEstimate lemma2_rhs(long l, long n, mpfr_prec_t bits = Real::kDefaultBits);

/// Same closed form for an arbitrary exponent a > -1.
AsymptoticEstimate power_sum_closed_form(const Real& a, long n);

/// Limit value of the expected transition count: (ρ_l/2) 2^{(3l+3)/2} 3^{(l-1)/2} Γ((l+1)/2).
AsymptoticEstimate alpha_total_asymptotic(long l, mpfr_prec_t bits = Real::kDefaultBits);

/// Expected number of vertices that ever belong to an l-component, (12l)^{1/3} n^{2/3}.
AsymptoticEstimate v_expected(long l, long n, mpfr_prec_t bits = Real::kDefaultBits);

/// Closed-form size of the k^4/n^3-weighted transition sum relative to the
/// unweighted one: 2^4 3^{4/3} Γ((l+1)/2 + 4/3)/Γ((l+1)/2)/n^{1/3}.
Real dominance_ratio(long l, long n, mpfr_prec_t bits = Real::kDefaultBits);

}  // namespace exlab::asymptotics
