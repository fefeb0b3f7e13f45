#include <cmath>

#include <doctest.h>

#include "exlab/asymptotics/log_real.hpp"
#include "exlab/errors.hpp"
#include "exlab/numeric/real.hpp"

using exlab::LogReal;
using exlab::Real;

TEST_CASE("real arithmetic keeps the wider precision") {
  const Real a(1.5, 64);
  const Real b(2L, 256);
  const Real c = a * b;
  CHECK(c.bits() == 256);
  CHECK(c == 3.0);
  CHECK((b / a).to_double() == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("rational literals are folded exactly") {
  const Real r = exlab::rational(701, 2100, 256);
  const Real q(mpq_class(701, 2100), 256);
  CHECK(r == q);
  CHECK(exlab::rational(6, 4, 64) == 1.5);
}

TEST_CASE("log gamma matches half-integer closed forms") {
  const Real half(0.5, 256);
  const Real lg = exlab::lgamma(half);
  const Real expected = exlab::log(exlab::sqrt(exlab::pi(256)));
  CHECK(exlab::abs(lg - expected).to_double() < 1e-70);
  CHECK_THROWS_AS(exlab::lgamma(Real(-1.0, 64)), exlab::DomainError);
}

TEST_CASE("parse and string rendering") {
  const Real x = Real::parse("0.232551", 128);
  CHECK(x.to_double() == doctest::Approx(0.232551));
  CHECK(Real(0.125, 64).str(5) == "0.125");
}

TEST_CASE("LogReal product and sum") {
  const auto a = LogReal::from_double(3.0);
  const auto b = LogReal::from_double(4.0);
  CHECK((a * b).to_double() == doctest::Approx(12.0));
  CHECK((a + b).to_double() == doctest::Approx(7.0));
  CHECK((a - b).to_double() == doctest::Approx(-1.0));
  CHECK((b / a).to_double() == doctest::Approx(4.0 / 3.0));
  CHECK((a - a).is_zero());
  CHECK((LogReal::zero() + a).to_double() == doctest::Approx(3.0));
}

TEST_CASE("LogReal carries magnitudes beyond double range") {
  // 1000^1000 = e^{6907.7...}
  const auto big = pow(LogReal::from_double(1000.0), Real(1000L, 256));
  CHECK(big.log_abs().to_double() == doctest::Approx(1000.0 * std::log(1000.0)));
  CHECK(std::isinf(big.to_double()));
  const auto r = ratio(big * LogReal::from_double(2.0), big);
  CHECK(r.to_double() == doctest::Approx(2.0));
}

TEST_CASE("LogReal results agree with a 512-bit recomputation within the budget") {
  auto evaluate = [](mpfr_prec_t bits) {
    LogReal acc = LogReal::zero(bits);
    for (long k = 1; k <= 200; ++k) {
      const Real kr(k, bits);
      acc += LogReal::from_log(kr * exlab::log(kr) - exlab::lgamma(kr + 1.0));
    }
    return acc;
  };
  const LogReal lo = evaluate(256);
  const LogReal hi = evaluate(512);
  const Real rel = exlab::abs(ratio(lo, hi) - 1.0);
  CHECK(rel <= lo.relative_error_budget());
  CHECK(lo.relative_error_budget() == doctest::Approx(std::ldexp(1.0, -128)));
}
