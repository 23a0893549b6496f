// Equivalence-constant estimation between seminorm pairs: extremal Rayleigh
// quotients of one quadratic form against another on the complement of the
// joint kernel, swept over periods with a fitted growth exponent.

#pragma once

#include "korn/seminorm.hpp"

#include <iosfwd>

namespace korn {

struct NormOnRange {
  RangeSet range;
  SeminormKind kind = SeminormKind::PatchIso;
};

struct EquivalenceReport {
  long period = 0;
  double c_min = 0.0;  // reported as 0 when the kernels differ
  double c_max = 0.0;
  int dim_ker_a = 0;
  int dim_ker_b = 0;
  bool kernels_equal = false;
};

/// Generalized eigenvalue extremes of (Q_b, Q_a) restricted to the orthogonal
/// complement of ker(Q_a) + ker(Q_b); kernel comparison by principal angles
/// (equal below 1e-6 rad).
EquivalenceReport compare(const GroupSpec& spec, const NormOnRange& a,
                          const NormOnRange& b, long period);

enum class GrowthDiagnosis { Bounded, Growing, Inconclusive };

const char* to_string(GrowthDiagnosis d);

struct SweepResult {
  std::vector<EquivalenceReport> reports;
  double growth_exponent = 0.0;  // log-log least-squares slope of c_max(N)
  GrowthDiagnosis diagnosis = GrowthDiagnosis::Inconclusive;
};

/// Runs compare over an ascending list of periods and fits the growth
/// exponent of c_max(N); "bounded" below 0.2, "growing" above 0.5.
SweepResult sweep(const GroupSpec& spec, const NormOnRange& a,
                  const NormOnRange& b, const std::vector<long>& periods);

/// CSV rows N,c_min,c_max,dim_ker_a,dim_ker_b,kernels_equal followed by a
/// JSON summary record with the growth diagnosis.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

/// Certified inner bounds on the quotient extremes from random directions in
/// the given complement basis; cross-checks the eigen-solve for large forms.
std::pair<double, double> rayleigh_sample_extremes(const Mat& q_a,
                                                   const Mat& q_b,
                                                   const Mat& complement,
                                                   int trials,
                                                   std::uint64_t seed);

}  // namespace korn
