#pragma once

#include <vector>

#include "exlab/exact/count_table.hpp"

namespace exlab::exact {

/// Expected number of l -> l+1 transitions that happen inside components of
/// order k over the whole evolution of the random graph process on n vertices:
///
///   (n)_k (k+l)!/k! c(k,k+l) ((k^2-3k-2l)/2) / (A)_{k+l+1},  A = nk - k(k+1)/2.
///
/// Zero when no such component exists or it has no internal non-edge.
/// Throws DomainError unless n >= 1, 1 <= k <= n, l >= -1, and ResourceError
/// when c(k, k+l) lies outside the table.
ExactRational alpha_exact(const ConnectedCountTable& table, long n, int l, long k);

/// Same quantity through the time integral
///   C(n,k) c(k,k+l) ((k^2-3k-2l)/2) B(k+l+1, M),
///   M = (n-k)k + C(k,2) - k - l,
/// with the Beta function expanded as (k+l)!(M-1)!/(k+l+M)!.
ExactRational alpha_exact_via_beta(const ConnectedCountTable& table, long n, int l, long k);

/// Sum of alpha_exact over k = 1..n.
ExactRational alpha_total_exact(const ConnectedCountTable& table, long n, int l);

/// alpha_exact(n, l, k) for k = 1..n; element 0 holds k = 1.
std::vector<ExactRational> alpha_profile(const ConnectedCountTable& table, long n, int l);

}  // namespace exlab::exact
