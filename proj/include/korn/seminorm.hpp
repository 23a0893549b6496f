// Seminorm evaluation, the quadratic forms realizing the squared seminorms,
// and their kernels at a fixed period.

#pragma once

#include "korn/field.hpp"
#include "korn/subspace.hpp"

namespace korn {

/// Coset-averaged root mean square distance of the local patches (or the
/// discrete derivative, for Grad* kinds) to the kind's rigidity subspace.
double seminorm(const PeriodicDisplacement& u, const RangeSet& r,
                SeminormKind kind);

/// Symmetric PSD matrix Q of size (d |C_N|) with u^T Q u = seminorm(u)^2 for
/// every flattened period-N field u.  Guarded at d |C_N| > 20000.
Mat quadratic_form(const GroupSpec& spec, const RangeSet& r, SeminormKind kind,
                   long period);

struct KernelBasis {
  long period = 0;
  int dimension = 0;
  Mat vectors;  // flattened fields, one orthonormal column per kernel mode
};

/// Null space of a symmetric PSD form (eigenvalues below 1e-9 * lambda_max).
KernelBasis form_kernel(const Mat& q, long period);

/// Null space of the quadratic form of (R, kind) at the given period.
KernelBasis kernel(const GroupSpec& spec, const RangeSet& r, SeminormKind kind,
                   long period);

/// Kernel modes materialized as periodic fields.
std::vector<PeriodicDisplacement> kernel_fields(GroupSpecPtr spec,
                                                const RangeSet& r,
                                                SeminormKind kind,
                                                long period);

}  // namespace korn
