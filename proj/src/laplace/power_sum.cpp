#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "exlab/errors.hpp"
#include "exlab/laplace/saddle.hpp"

namespace exlab::laplace {

namespace {

constexpr long kDirectLimit = 10'000'000;
constexpr long double kCutoff = 120.0L;  // terms below e^-120 of the peak are bounded, not summed

/// log of the summand, φ(k) = a ln k - k^3/24n^2 + lk^2/8n^2 + lk/2n, and its derivatives.
struct LogSummand {
  long double a, l, n;

  long double value(long double k) const {
    const long double n2 = n * n;
    return a * std::log(k) - k * k * k / (24.0L * n2) + l * k * k / (8.0L * n2) + l * k / (2.0L * n);
  }
  long double d1(long double k) const {
    const long double n2 = n * n;
    return a / k - k * k / (8.0L * n2) + l * k / (4.0L * n2) + l / (2.0L * n);
  }
  long double d2(long double k) const {
    const long double n2 = n * n;
    return -a / (k * k) - k / (4.0L * n2) + l / (4.0L * n2);
  }
};

/// Compensated sum of e^{x_i} kept relative to the running maximum.
class ScaledSum {
 public:
  void add(long double log_term) {
    if (log_term > scale_) {
      const long double shrink = std::exp(scale_ - log_term);
      sum_ *= shrink;
      comp_ *= shrink;
      scale_ = log_term;
    }
    const long double t = std::exp(log_term - scale_);
    const long double s = sum_ + t;
    comp_ += std::fabs(sum_) >= t ? (sum_ - s) + t : (t - s) + sum_;
    sum_ = s;
  }
  long double scale() const { return scale_; }
  long double normalized() const { return sum_ + comp_; }

 private:
  long double scale_ = -std::numeric_limits<long double>::infinity();
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

void add_range(ScaledSum& acc, const LogSummand& f, long from, long to) {
  for (long k = from; k <= to; ++k) acc.add(f.value(static_cast<long double>(k)));
}

/// Integer argmax of the concave log-summand over [1, n].
long peak_of(const LogSummand& f, long n) {
  if (f.d1(static_cast<long double>(n)) >= 0.0L) return n;
  long double lo = 1.0L, hi = static_cast<long double>(n);
  for (int i = 0; i < 200 && hi - lo > 0.5L; ++i) {
    const long double mid = 0.5L * (lo + hi);
    (f.d1(mid) > 0.0L ? lo : hi) = mid;
  }
  const long k = static_cast<long>(std::floor(lo));
  if (k + 1 <= n && f.value(k + 1.0L) > f.value(static_cast<long double>(k))) return k + 1;
  return std::max(1L, k);
}

/// First integer in [lo, hi] where pred holds, with pred monotone false -> true; hi+1 if none.
template <typename Pred>
long first_true(long lo, long hi, Pred pred) {
  long a = lo, b = hi + 1;
  while (a < b) {
    const long mid = a + (b - a) / 2;
    if (pred(mid)) {
      b = mid;
    } else {
      a = mid + 1;
    }
  }
  return a;
}

}  // namespace

PowerSumResult power_sum_detailed(const SaddleProblem& p, long direct_limit) {
  const long n = p.n();
  const LogSummand f{p.a().to_long_double(), static_cast<long double>(p.l()),
                     static_cast<long double>(n)};
  const auto bits = p.bits();

  if (n <= direct_limit) {
    ScaledSum acc;
    add_range(acc, f, 1, n);
    const Real lg = Real::from_long_double(acc.scale(), bits) +
                    Real::from_long_double(std::log(acc.normalized()), bits);
    return {LogReal::from_log(lg), 64.0 * std::numeric_limits<long double>::epsilon(), true};
  }

  const long peak = peak_of(f, n);
  const long double top = f.value(static_cast<long double>(peak));
  auto above_cutoff = [&](long k) { return f.value(static_cast<long double>(k)) - top >= -kCutoff; };
  const long lo = first_true(1, peak, above_cutoff);
  const long hi = first_true(peak, n, [&](long k) { return !above_cutoff(k); }) - 1;

  // Concavity gives φ(k) <= φ(c) + φ'(c)(k - c), hence geometric tail bounds.
  long double tail = 0.0L;
  if (lo > 1) {
    const long double c = lo - 1.0L;
    tail += std::exp(f.value(c) - top) / -std::expm1(-f.d1(c));
  }
  if (hi < n) {
    const long double c = hi + 1.0L;
    tail += std::exp(f.value(c) - top) / -std::expm1(f.d1(c));
  }

  long double body = 0.0L;
  long double bound = tail;
  bool direct = false;
  if (hi - lo + 1 <= direct_limit) {
    ScaledSum acc;
    add_range(acc, f, lo, hi);
    body = acc.normalized() * std::exp(acc.scale() - top);
    bound += 64.0L * std::numeric_limits<long double>::epsilon() * body;
    direct = true;
  } else {
    using boost::math::quadrature::gauss_kronrod;
    auto g = [&](long double x) { return std::exp(f.value(x) - top); };
    auto g2 = [&](long double x) {
      const long double d = f.d1(x);
      return std::exp(f.value(x) - top) * std::fabs(d * d + f.d2(x));
    };
    const long double sigma = 1.0L / std::sqrt(-f.d2(static_cast<long double>(peak)));
    std::vector<long double> cuts{static_cast<long double>(peak)};
    for (long double r = sigma; peak - r > lo; r *= 2.0L) cuts.insert(cuts.begin(), peak - r);
    cuts.insert(cuts.begin(), static_cast<long double>(lo));
    for (long double r = sigma; peak + r < hi; r *= 2.0L) cuts.push_back(peak + r);
    cuts.push_back(static_cast<long double>(hi));

    long double integral = 0.0L, curvature = 0.0L, quad_err = 0.0L;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (cuts[i + 1] <= cuts[i]) continue;
      long double e1 = 0.0L, e2 = 0.0L;
      integral += gauss_kronrod<long double, 31>::integrate(g, cuts[i], cuts[i + 1], 15, 1e-14L, &e1);
      curvature += gauss_kronrod<long double, 31>::integrate(g2, cuts[i], cuts[i + 1], 15, 1e-6L, &e2);
      quad_err += e1;
    }
    const long double xl = lo, xh = hi;
    // Euler-Maclaurin: trapezoid ends plus B_2/2! (f'(b) - f'(a)); remainder <= (1/12)∫|f''|.
    body = integral + 0.5L * (g(xl) + g(xh)) + (g(xh) * f.d1(xh) - g(xl) * f.d1(xl)) / 12.0L;
    bound += curvature / 12.0L + quad_err;
  }
  if (!(body > 0.0L) || !std::isfinite(body)) throw NumericalError("power sum evaluation failed");

  const Real lg = Real::from_long_double(top, bits) + Real::from_long_double(std::log(body), bits);
  return {LogReal::from_log(lg), static_cast<double>(bound / body), direct};
}

PowerSumResult power_sum_detailed(const SaddleProblem& p) {
  return power_sum_detailed(p, kDirectLimit);
}

LogReal power_sum(const SaddleProblem& p) { return power_sum_detailed(p).value; }

}  // namespace exlab::laplace
