#pragma once

#include "exlab/exact/count_table.hpp"

namespace exlab::exact {

/// Exact expected number of l -> l+1 transitions over a uniformly random
/// ordering of the edges of K_n, by exhaustive replay.
///
/// n <= 5 walks every permutation (10! orderings at n = 5). n = 6 aggregates
/// the same sum over the 2^15 edge subsets, since the probability that a
/// given prefix set S is followed by a given edge is |S|!(N-|S|-1)!/N!.
/// Throws ResourceError for n > 6.
ExactRational brute_force_alpha(int n, int l);

/// The permutation walk alone; n <= 5.
ExactRational brute_force_alpha_permutations(int n, int l);

/// The edge-subset aggregation alone; n <= 6.
ExactRational brute_force_alpha_subsets(int n, int l);

}  // namespace exlab::exact
