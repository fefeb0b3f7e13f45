#include <cmath>

#include <doctest.h>

#include "exlab/asymptotics/estimates.hpp"
#include "exlab/errors.hpp"
#include "exlab/laplace/saddle.hpp"

namespace lp = exlab::laplace;
using exlab::LogReal;
using exlab::Real;

namespace {

double rel_gap(const LogReal& a, const LogReal& b) { return std::fabs(ratio(a, b).to_double() - 1.0); }

}  // namespace

TEST_CASE("problem parameters") {
  const lp::SaddleProblem p(9, 1'000'000);
  CHECK(p.a() == 14.0);
  CHECK(p.a1() == 15.0);
  CHECK(p.c1().to_double() == doctest::Approx(0.09));
  CHECK(p.c2().to_double() == doctest::Approx(9e-4));
  CHECK_THROWS_AS(lp::SaddleProblem(-1, 10), exlab::DomainError);
  CHECK_THROWS_AS(lp::SaddleProblem(1, 0), exlab::DomainError);
}

TEST_CASE("h at the origin without excess") {
  const lp::SaddleProblem p(0, 1000);
  const auto hv = lp::h_eval(Real(0.0, 256), p);
  CHECK(hv.h.to_double() == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("derivatives match central differences") {
  const double eps = 1e-6;
  for (long l : {1L, 9L, 40L})
    for (long n : {1000L, 1'000'000L, 1'000'000'000L})
      for (double z : {-1.0, 0.0, 0.5, 1.2}) {
        const lp::SaddleProblem p(l, n);
        const Real zr(z, 256), e(eps, 256);
        const auto mid = lp::h_eval(zr, p);
        const auto up = lp::h_eval(zr + e, p);
        const auto dn = lp::h_eval(zr - e, p);
        const double d1 = ((up.h - dn.h) / (e * 2.0)).to_double();
        const double d2 = ((up.h1 - dn.h1) / (e * 2.0)).to_double();
        CAPTURE(l);
        CAPTURE(n);
        CAPTURE(z);
        CHECK(std::fabs(d1 - mid.h1.to_double()) <= 1e-9 * (1.0 + std::fabs(mid.h1.to_double())));
        CHECK(std::fabs(d2 - mid.h2.to_double()) <= 1e-9 * (1.0 + std::fabs(mid.h2.to_double())));
      }
}

TEST_CASE("h overflow is reported") {
  const lp::SaddleProblem p(1, 10);
  CHECK_THROWS_AS(lp::h_eval(Real(1e20, 256), p), exlab::NumericalError);
}

TEST_CASE("saddle root") {
  for (long l : {1L, 9L, 50L, 100L})
    for (long n : {1000L, 1'000'000L, 1'000'000'000'000L}) {
      const lp::SaddleProblem p(l, n);
      const auto s = lp::solve_saddle(p);
      CAPTURE(l);
      CAPTURE(n);
      CHECK(s.h2_at_z0 < 0.0);
      CHECK(s.residual.to_double() < 1e-20);
      CHECK(std::fabs(lp::h_eval(s.z0, p).h1.to_double()) < 1e-20);
    }
  CHECK_THROWS_AS(lp::solve_saddle(lp::SaddleProblem(0, 100)), exlab::DomainError);
}

TEST_CASE("saddle approaches its large-n limit") {
  const lp::SaddleProblem far(9, 1'000'000'000'000'000'000);
  CHECK(lp::limiting_z0(far).to_double() == doctest::Approx(std::log(15.0) / 3.0).epsilon(1e-15));
  CHECK(lp::limiting_z0(far).to_double() == doctest::Approx(0.902679).epsilon(1e-5));

  double prev_z = 1e9, prev_h = 1e9;
  for (long n : {1'000'000L, 1'000'000'000L, 1'000'000'000'000L}) {
    const lp::SaddleProblem p(9, n);
    const auto s = lp::solve_saddle(p);
    const double dz = std::fabs((s.z0 - lp::limiting_z0(p)).to_double());
    const double dh = std::fabs((s.h_at_z0 - lp::limiting_h_at_z0(p)).to_double());
    CAPTURE(n);
    // Gap bounded by a constant times l^{1/3}/n^{1/3}.
    CHECK(dz <= 2.0 * std::cbrt(9.0) / std::cbrt(double(n)));
    CHECK(dz < prev_z);
    CHECK(dh < prev_h);
    prev_z = dz;
    prev_h = dh;
  }
}

TEST_CASE("quadrature") {
  const lp::SaddleProblem p(50, 10'000'000'000);
  const auto s = lp::solve_saddle(p);
  CHECK(lp::normalized_integrand(s.z0.to_long_double(), p, s) == doctest::Approx(1.0).epsilon(1e-15));
  const auto q = lp::integral_quadrature(p);
  CHECK(q.relative_error < 1e-10);
  CHECK(q.doublings >= 1);
  CHECK(rel_gap(lp::laplace_estimate(p), q.value) < 0.05);
}

TEST_CASE("Laplace estimate improves with l") {
  const long n = 1'000'000'000'000;
  const double g9 = rel_gap(lp::laplace_estimate(lp::SaddleProblem(9, n)),
                            lp::integral_quadrature(lp::SaddleProblem(9, n)).value);
  const double g100 = rel_gap(lp::laplace_estimate(lp::SaddleProblem(100, n)),
                              lp::integral_quadrature(lp::SaddleProblem(100, n)).value);
  CHECK(g100 < g9);
}

TEST_CASE("Laplace chain reaches the closed form as l grows") {
  const long n = 1'000'000'000'000'000;
  auto gap = [&](long l) {
    const lp::SaddleProblem p(l, n);
    const Real log_scale = p.a1() * exlab::log(Real(2L, 256)) + p.a1() * 2.0 / 3.0 * exlab::log(Real(n, 256));
    const LogReal chained = LogReal::from_log(log_scale) * lp::laplace_estimate(p);
    return rel_gap(chained, exlab::asymptotics::lemma2_rhs(l, n).value);
  };
  CHECK(gap(20) < gap(5));
  CHECK(gap(80) < gap(20));
}

TEST_CASE("power sum") {
  for (long l : {0L, 1L, 5L}) {
    const auto v = lp::power_sum(lp::SaddleProblem(l, 1)).to_double();
    CHECK(v == doctest::Approx(std::exp(-1.0 / 24.0 + l / 8.0 + l / 2.0)).epsilon(1e-15));
  }

  double prev = 1e9;
  for (long n : {10'000L, 100'000L, 1'000'000L}) {
    const lp::SaddleProblem p(1, n);
    const double g = rel_gap(lp::power_sum(p), exlab::asymptotics::lemma2_rhs(1, n).value);
    CHECK(g < prev);
    prev = g;
  }

  // The summand vanishes to high order at 0 and decays fast past the peak, so
  // sum and integral already agree to working accuracy.
  for (long n : {10'000L, 100'000L, 1'000'000L}) {
    const lp::SaddleProblem p(4, n);
    CHECK(rel_gap(lp::power_sum(p), lp::integral_form(p)) < 1e-15);
  }
}

TEST_CASE("power sum above the direct limit") {
  // The Euler-Maclaurin route must reproduce the term-by-term sum.
  for (long l : {1L, 8L}) {
    const lp::SaddleProblem p(l, 2'000'000);
    const auto direct = lp::power_sum_detailed(p);
    const auto em = lp::power_sum_detailed(p, 1000);
    CHECK(direct.direct);
    CHECK_FALSE(em.direct);
    CHECK(rel_gap(direct.value, em.value) <= em.relative_error_bound + 1e-15);
    CHECK(em.relative_error_bound < 1e-9);
  }
  const auto big = lp::power_sum_detailed(lp::SaddleProblem(8, 1'000'000'000'000));
  CHECK_FALSE(big.direct);
  CHECK(big.relative_error_bound < 1e-9);
  CHECK(rel_gap(big.value, lp::integral_form(lp::SaddleProblem(8, 1'000'000'000'000))) < 0.01);
}
