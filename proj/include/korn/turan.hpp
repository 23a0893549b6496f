// Turán's minimax bound on generalized power sums, evaluated directly.

#pragma once

#include "korn/numeric.hpp"

namespace korn {

/// max over nu in {m+1, ..., m+n} of |sum_j b_j z_j^nu| / sum_j |b_j||z_j|^nu.
double turan_power_sum_ratio(const CVec& b, const CVec& z, int m);

/// The guaranteed lower bound (1/n)(delta/2)^(n-1) with
/// delta = min_{mu != nu} |z_mu - z_nu| / max_j |z_j|.
double turan_lower_bound(const CVec& z);

/// True iff the ratio meets the bound.  Throws on zero entries or
/// coincident z values (delta = 0).
bool turan_lower_bound_check(const CVec& b, const CVec& z, int m);

}  // namespace korn
