// T^N-periodic displacement fields u : G -> R^d, stored densely per coset of
// T^N: one d-vector for every (coset rep, exponent tuple mod N/m0).

#pragma once

#include "korn/range_set.hpp"

#include <iosfwd>

namespace korn {

/// Site indexing shared by periodic fields and quadratic forms: one site per
/// (coset, exponent tuple mod N/m0), coset-major, exponents lexicographic.
class SiteIndexer {
 public:
  SiteIndexer(const GroupSpec& spec, long period);

  long period() const { return period_; }
  long reps() const { return reps_; }
  long site_count() const { return sites_; }

  long site_of(const CanonicalElement& e) const;
  CanonicalElement element_of(long site) const;

 private:
  const GroupSpec* spec_;
  long period_ = 0;
  long reps_ = 1;
  long sites_ = 0;
};

class PeriodicDisplacement {
 public:
  /// Zero field of period N (N must be a positive multiple of m0).
  PeriodicDisplacement(GroupSpecPtr spec, long period);

  /// Deterministic field with entries i.i.d. uniform on [-1, 1].
  static PeriodicDisplacement random(GroupSpecPtr spec, long period,
                                     std::uint64_t seed);

  const GroupSpecPtr& spec() const { return spec_; }
  const SiteIndexer& indexer() const { return indexer_; }
  long period() const { return indexer_.period(); }
  /// N / m0, the number of representatives per lattice direction.
  long reps() const { return indexer_.reps(); }
  long site_count() const { return values_.cols(); }

  /// Dense storage, d x site_count.
  Mat& values() { return values_; }
  const Mat& values() const { return values_; }

  /// Site index of a canonical element (exponents reduced mod N/m0).
  long site_of(const CanonicalElement& e) const { return indexer_.site_of(e); }
  CanonicalElement element_of(long site) const {
    return indexer_.element_of(site);
  }

  /// u(g) for arbitrary g, using the periodicity.
  Vec value(const CanonicalElement& e) const {
    return values_.col(site_of(e));
  }

  /// Same field viewed at period `period` (a multiple of the current one).
  PeriodicDisplacement lift(long period) const;

  /// Field as one stacked vector of length d * site_count (site-major).
  Vec flatten() const;
  static PeriodicDisplacement from_flat(GroupSpecPtr spec, long period,
                                        const Vec& flat);

 private:
  GroupSpecPtr spec_;
  SiteIndexer indexer_;
  Mat values_;
};

/// <u, v> = (1/|C_N|) sum_{g in C_N} <u(g), v(g)> at the common period
/// N = lcm of the two periods.  Requires matching specs.
double inner_product(const PeriodicDisplacement& u,
                     const PeriodicDisplacement& v);

inline double field_norm(const PeriodicDisplacement& u) {
  return std::sqrt(std::max(0.0, inner_product(u, u)));
}

/// v(g) = g.(x0 + u(g)), the deformation associated with the displacement.
Vec deformation(const PeriodicDisplacement& u, const CanonicalElement& g);

/// (nabla_R u(g))(h) = u(gh) - rot(h)^T u(g), in the order of R.
std::vector<Vec> discrete_derivative(const PeriodicDisplacement& u,
                                     const RangeSet& r,
                                     const CanonicalElement& g);

/// CSV with header coset_index,a_1..a_d2,u_1..u_d; 17 significant digits.
void write_field_csv(const PeriodicDisplacement& u, std::ostream& out);
PeriodicDisplacement read_field_csv(GroupSpecPtr spec, std::istream& in);

}  // namespace korn
