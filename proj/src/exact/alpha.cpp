#include "exlab/exact/alpha.hpp"

#include "exlab/errors.hpp"

namespace exlab::exact {

namespace {

void check_domain(long n, int l, long k) {
  if (n < 1) throw DomainError("alpha requires n >= 1");
  if (k < 1 || k > n) throw DomainError("alpha requires 1 <= k <= n");
  if (l < -1) throw DomainError("alpha requires l >= -1");
}

/// x (x-1) ... (x-count+1)
Count falling(long x, long count) {
  Count out = 1;
  for (long i = 0; i < count; ++i) out *= x - i;
  return out;
}

/// Twice the number of internal non-edges of a (k, k+l) component.
long twice_non_edges(long k, int l) { return k * k - 3 * k - 2L * l; }

Count factorial(long x) {
  Count out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(x));
  return out;
}

}  // namespace

ExactRational alpha_exact(const ConnectedCountTable& table, long n, int l, long k) {
  check_domain(n, l, k);
  const long twice = twice_non_edges(k, l);
  if (twice <= 0) return ExactRational(0);
  const Count c = table.count(k, k + l);
  if (c == 0) return ExactRational(0);

  const long a = n * k - k * (k + 1) / 2;
  const long span = k + l + 1;
  if (a - span < 0) return ExactRational(0);

  // (n)_k (k+l)!/k! c (twice/2) / (A)_{k+l+1}
  Count num = falling(n, k) * c * twice;
  Count den = falling(a, span) * 2;
  if (l >= 0) {
    num *= falling(k + l, l);  // (k+l)!/k!
  } else {
    den *= k;  // (k-1)!/k! = 1/k
  }
  ExactRational out(num, den);
  out.canonicalize();
  return out;
}

ExactRational alpha_exact_via_beta(const ConnectedCountTable& table, long n, int l, long k) {
  check_domain(n, l, k);
  const long twice = twice_non_edges(k, l);
  if (twice <= 0) return ExactRational(0);
  const Count c = table.count(k, k + l);
  if (c == 0) return ExactRational(0);

  const long exponent_1mt = (n - k) * k + k * (k - 1) / 2 - k - l;  // M
  if (exponent_1mt <= 0) return ExactRational(0);
  const long p = k + l + 1;

  // B(p, M) = (p-1)! (M-1)! / (p+M-1)!
  ExactRational beta(factorial(p - 1) * factorial(exponent_1mt - 1),
                     factorial(p + exponent_1mt - 1));
  beta.canonicalize();
  ExactRational out(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) * c *
                        twice,
                    2);
  out.canonicalize();
  return out * beta;
}

std::vector<ExactRational> alpha_profile(const ConnectedCountTable& table, long n, int l) {
  if (n < 1) throw DomainError("alpha requires n >= 1");
  std::vector<ExactRational> out;
  out.reserve(n);
  for (long k = 1; k <= n; ++k) out.push_back(alpha_exact(table, n, l, k));
  return out;
}

ExactRational alpha_total_exact(const ConnectedCountTable& table, long n, int l) {
  ExactRational total(0);
  for (const auto& term : alpha_profile(table, n, l)) total += term;
  return total;
}

}  // namespace exlab::exact
