#include "exlab/asymptotics/estimates.hpp"

#include "exlab/errors.hpp"

namespace exlab::asymptotics {

namespace {

Real num(long x, mpfr_prec_t bits) { return Real(x, bits); }

Real log_of(long x, mpfr_prec_t bits) { return log(num(x, bits)); }

/// log of the leading ρ_l.
Real log_rho_leading(long l, mpfr_prec_t bits) {
  const Real ln2 = log_of(2, bits);
  const Real half_log_3_over_pi = log(Real(3L, bits) / pi(bits)) / 2.0;
  // (l/2) log(e/12l) = (l/2)(1 - log 12l)
  const Real tail = num(l, bits) / 2.0 * (1.0 - log_of(12 * l, bits));
  return half_log_3_over_pi - ln2 + tail;
}

Real log_wright_w(long l, mpfr_prec_t bits) {
  const Real lr = num(l, bits);
  const Real two_pi = pi(bits) * 2.0;
  return log(pi(bits)) + lgamma(lr) - lgamma(lr * 1.5) - log(two_pi) +
         log(Real(8L, bits) / 3.0) / 2.0 +
         lr / 2.0 * (log(lr * 27.0 / 8.0) - 1.0);
}

}  // namespace

const std::array<mpq_class, 4>& WrightConstants::r() {
  static const std::array<mpq_class, 4> values = [] {
    std::array<mpq_class, 4> out{mpq_class(-1, 2), mpq_class(701, 2100), mpq_class(-263, 1050),
                                 mpq_class(538859, 2695000)};
    for (auto& q : out) q.canonicalize();
    return out;
  }();
  return values;
}

Real WrightConstants::d_leading(mpfr_prec_t bits) { return 1.0 / (pi(bits) * 2.0); }

Real WrightConstants::w0(mpfr_prec_t bits) { return pi(bits) / sqrt(Real(6L, bits)); }

std::string_view error_order_tag(ErrorOrder order) {
  switch (order) {
    case ErrorOrder::kExact:
      return "exact";
    case ErrorOrder::kOneOverL:
      return "O(1/l)";
    case ErrorOrder::kBcmUniform:
      return "O(l^m/k^(m-1)+sqrt(l/k)+(l+1)^(1/16)/k^(9/50)) for l=O(k^(1-eps))";
    case ErrorOrder::kTransitionApprox:
      return "O(k/n+k^4/n^3+1/k)+O(l^3/k^2+sqrt(l/k)+(l+1)^(1/16)/k^(9/50)) for l=O(k^(2/3))";
    case ErrorOrder::kPowerSumLimit:
      return "~ as n->inf with l=o(n^(1/4))";
    case ErrorOrder::kSaddleLocation:
      return "O(l^(1/3)/n^(1/3))";
    case ErrorOrder::kSaddleValue:
      return "O(l^(4/3)/n^(1/3))";
    case ErrorOrder::kLaplaceLeading:
      return "~ as l->inf";
    case ErrorOrder::kVertexCount:
      return "~ as l,n->inf with l=o(n^(1/4))";
  }
  return "unknown";
}

AsymptoticEstimate rho(long l, RhoMode mode, mpfr_prec_t bits) {
  if (l < 1) throw DomainError("rho requires l >= 1");
  Real lg = log_rho_leading(l, bits);
  if (mode == RhoMode::kViaW) lg += log_wright_w(l, bits);
  return {LogReal::from_log(std::move(lg)), ErrorOrder::kOneOverL};
}

AsymptoticEstimate wright_w(long l, mpfr_prec_t bits) {
  if (l < 0) throw DomainError("wright_w requires l >= 0");
  if (l == 0) return {LogReal::from_real(WrightConstants::w0(bits)), ErrorOrder::kExact};
  return {LogReal::from_log(log_wright_w(l, bits)), ErrorOrder::kOneOverL};
}

AsymptoticEstimate c_bcm(long k, long l, int terms, mpfr_prec_t bits) {
  if (k < 2 || l < 1) throw DomainError("c_bcm requires k >= 2 and l >= 1");
  if (terms < 2 || terms > 6) {
    throw DomainError("c_bcm supports 2 <= terms <= 6 (only r_1..r_4 are known)");
  }
  const Real lr = num(l, bits);
  const Real kr = num(k, bits);
  // √(3/π) (w_l/2) (e/12l)^{l/2} = ρ_l(via w)
  Real lg = log_rho_leading(l, bits) + log_wright_w(l, bits);
  lg += (kr + (lr * 3.0 - 1.0) / 2.0) * log(kr);
  const auto& r = WrightConstants::r();
  for (int i = 1; i <= terms - 2; ++i) {
    lg += Real(r[i - 1], bits) * pow(lr, num(i + 1, bits)) / pow(kr, num(i, bits));
  }
  return {LogReal::from_log(std::move(lg)), ErrorOrder::kBcmUniform};
}

AsymptoticEstimate alpha_approx(long n, long l, long k, mpfr_prec_t bits) {
  if (l < 1 || k < 1 || k > n) throw DomainError("alpha_approx requires l >= 1 and 1 <= k <= n");
  const Real nr = num(n, bits), kr = num(k, bits), lr = num(l, bits);
  const Real n2 = nr * nr;
  Real lg = log_rho_leading(l, bits) - log_of(2, bits);
  lg += (lr * 3.0 + 1.0) / 2.0 * log(kr) - (lr + 1.0) * log(nr);
  lg += -(kr * kr * kr) / (n2 * 24.0) + lr * kr * kr / (n2 * 8.0) + lr * kr / (nr * 2.0);
  return {LogReal::from_log(std::move(lg)), ErrorOrder::kTransitionApprox};
}

AsymptoticEstimate power_sum_closed_form(const Real& a, long n) {
  const auto bits = a.bits();
  if (n < 1) throw DomainError("power sum closed form requires n >= 1");
  if (a <= -1.0) throw DomainError("power sum closed form requires a > -1");
  const Real a1 = a + 1.0;
  Real lg = a1 * log_of(2, bits) + (a - 2.0) / 3.0 * log_of(3, bits) + lgamma(a1 / 3.0) +
            a1 * 2.0 / 3.0 * log_of(n, bits);
  return {LogReal::from_log(std::move(lg)), ErrorOrder::kPowerSumLimit};
}

AsymptoticEstimate lemma2_rhs(long l, long n, mpfr_prec_t bits) {
  if (l < 0) throw DomainError("lemma2_rhs requires l >= 0");
  return power_sum_closed_form((num(l, bits) * 3.0 + 1.0) / 2.0, n);
}

AsymptoticEstimate alpha_total_asymptotic(long l, mpfr_prec_t bits) {
  if (l < 1) throw DomainError("alpha_total_asymptotic requires l >= 1");
  const Real lr = num(l, bits);
  Real lg = log_rho_leading(l, bits) - log_of(2, bits);
  lg += (lr * 3.0 + 3.0) / 2.0 * log_of(2, bits) + (lr - 1.0) / 2.0 * log_of(3, bits) +
        lgamma((lr + 1.0) / 2.0);
  return {LogReal::from_log(std::move(lg)), ErrorOrder::kOneOverL};
}

AsymptoticEstimate v_expected(long l, long n, mpfr_prec_t bits) {
  if (l < 1 || n < 1) throw DomainError("v_expected requires l >= 1 and n >= 1");
  Real lg = log_of(12 * l, bits) / 3.0 + log_of(n, bits) * 2.0 / 3.0;
  return {LogReal::from_log(std::move(lg)), ErrorOrder::kVertexCount};
}

Real dominance_ratio(long l, long n, mpfr_prec_t bits) {
  if (l < 1 || n < 2) throw DomainError("dominance_ratio requires l >= 1 and n >= 2");
  // Sum (A) is the closed form at a = (3l+1)/2 over n^{l+1}; sum (B) carries an
  // extra k^4/n^3, i.e. exponent a+4 over n^{l+4}.
  const Real a = (num(l, bits) * 3.0 + 1.0) / 2.0;
  const LogReal sum_a = power_sum_closed_form(a, n).value;
  const LogReal sum_b = power_sum_closed_form(a + 4.0, n).value /
                        LogReal::from_log(log_of(n, bits) * 3.0);
  return ratio(sum_b, sum_a);
}

}  // namespace exlab::asymptotics
