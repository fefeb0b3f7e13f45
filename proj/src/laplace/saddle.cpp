#include "exlab/laplace/saddle.hpp"

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "exlab/errors.hpp"

namespace exlab::laplace {

SaddleProblem::SaddleProblem(long l, long n, mpfr_prec_t bits)
    : l_(l), n_(n), a_(bits), a1_(bits), c1_(bits), c2_(bits) {
  if (l < 0) throw DomainError("saddle problem requires l >= 0");
  if (n < 1) throw DomainError("saddle problem requires n >= 1");
  const Real lr(l, bits);
  a_ = (lr * 3.0 + 1.0) / 2.0;
  a1_ = a_ + 1.0;
  const Real n13 = cbrt(Real(n, bits));
  c1_ = lr / n13;
  c2_ = lr / (n13 * n13);
}

HValues h_eval(const Real& z, const SaddleProblem& p) {
  if (!z.is_finite()) throw NumericalError("h_eval requires finite z");
  const Real u = exp(z);
  const Real u2 = u * u;
  const Real u3 = u2 * u;
  if (!u3.is_finite()) throw NumericalError("e^{3z} overflows the working precision range");
  HValues out{-u3 / 3.0 + p.c2() * u2 / 2.0 + p.c1() * u + p.a1() * z,
              -u3 + p.c2() * u2 + p.c1() * u + p.a1(),
              -u3 * 3.0 + p.c2() * u2 * 2.0 + p.c1() * u};
  return out;
}

SaddleSolution solve_saddle(const SaddleProblem& p) {
  if (p.l() < 1) throw DomainError("solve_saddle requires l >= 1");
  const auto bits = p.bits();
  const Real tol = Real(std::ldexp(1.0, -static_cast<int>(bits / 2)), bits);

  // h' starts at a+1 > 0 for z -> -inf, rises, then falls monotonically to -inf,
  // so a bracket [lo, hi] with h'(lo) > 0 > h'(hi) isolates the only root.
  Real z = log(p.a1()) / 3.0;
  Real lo = z - 1.0;
  while (h_eval(lo, p).h1 <= 0.0) lo = lo - 1.0;
  Real hi = z + 1.0;
  while (h_eval(hi, p).h1 >= 0.0) hi = hi + 1.0;

  for (int it = 1; it <= 400; ++it) {
    const HValues hv = h_eval(z, p);
    if (abs(hv.h1) < tol) {
      return {z, hv.h, hv.h2, abs(hv.h1), it};
    }
    if (hv.h1 > 0.0) {
      lo = z;
    } else {
      hi = z;
    }
    Real next = z - hv.h1 / hv.h2;
    if (!(hv.h2 < 0.0) || !(next > lo) || !(next < hi)) next = (lo + hi) / 2.0;
    z = std::move(next);
  }
  throw NumericalError("saddle-point iteration did not converge");
}

Real limiting_z0(const SaddleProblem& p) {
  return log(Real(p.l() + 1, p.bits()) * 1.5) / 3.0;
}

Real limiting_h_at_z0(const SaddleProblem& p) {
  return p.a1() / 3.0 * log(p.a1()) - p.a1() / 3.0;
}

LogReal laplace_estimate(const SaddleSolution& s) {
  const auto bits = s.z0.bits();
  const Real two_pi = pi(bits) * 2.0;
  return LogReal::from_log(s.h_at_z0 + log(two_pi / -s.h2_at_z0) / 2.0);
}

LogReal laplace_estimate(const SaddleProblem& p) { return laplace_estimate(solve_saddle(p)); }

long double normalized_integrand(long double z, const SaddleProblem& p, const SaddleSolution& s) {
  const long double d = z - s.z0.to_long_double();
  if (3.0L * d > 700.0L) return 0.0L;  // underflows far right of the peak
  const long double u = std::exp(s.z0.to_long_double());
  const long double c1 = p.c1().to_long_double();
  const long double c2 = p.c2().to_long_double();
  const long double diff = -(u * u * u / 3.0L) * std::expm1(3.0L * d) +
                           (c2 / 2.0L) * u * u * std::expm1(2.0L * d) +
                           c1 * u * std::expm1(d) + p.a1().to_long_double() * d;
  return std::exp(diff);
}

QuadratureResult integral_quadrature(const SaddleProblem& p) {
  const SaddleSolution s = solve_saddle(p);
  const long double z0 = s.z0.to_long_double();
  const long double sigma = 1.0L / std::sqrt(-s.h2_at_z0.to_long_double());
  auto f = [&](long double z) { return normalized_integrand(z, p, s); };

  using boost::math::quadrature::gauss_kronrod;
  // Break points at z0 ± σ·2^j keep the peak resolved for any width.
  auto window_integral = [&](long double w, long double& err) {
    std::vector<long double> cuts{0.0L};
    for (long double r = sigma; r < w; r *= 2.0L) cuts.push_back(r);
    cuts.push_back(w);
    long double total = 0.0L;
    err = 0.0L;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      for (const long double side : {-1.0L, 1.0L}) {
        long double a = z0 + side * cuts[i], b = z0 + side * cuts[i + 1];
        if (a > b) std::swap(a, b);
        long double e = 0.0L;
        total += gauss_kronrod<long double, 31>::integrate(f, a, b, 15, 1e-15L, &e);
        err += e;
      }
    }
    return total;
  };

  long double w = std::max(10.0L, 8.0L * sigma);
  long double err = 0.0L;
  long double current = window_integral(w, err);
  for (int doublings = 1; doublings <= 8; ++doublings) {
    long double next_err = 0.0L;
    const long double next = window_integral(2.0L * w, next_err);
    w *= 2.0L;
    if (std::fabs(next - current) <= 1e-12L * next) {
      LogReal value =
          LogReal::from_log(s.h_at_z0 + Real::from_long_double(std::log(next), p.bits()));
      return {value, static_cast<double>(next_err / next), static_cast<double>(w), doublings};
    }
    current = next;
    err = next_err;
  }
  throw NumericalError("quadrature window never satisfied the tail test");
}

LogReal integral_form(const SaddleProblem& p) {
  const auto bits = p.bits();
  const Real log_scale = p.a1() * log(Real(2L, bits)) +
                         p.a1() * 2.0 / 3.0 * log(Real(p.n(), bits));
  return LogReal::from_log(log_scale) * integral_quadrature(p).value;
}

}  // namespace exlab::laplace
