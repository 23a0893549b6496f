// Finite interaction ranges R in G and the two richness properties.

#pragma once

#include "korn/group_spec.hpp"

namespace korn {

struct RangeSet {
  std::vector<CanonicalElement> elements;

  std::size_t size() const { return elements.size(); }
};

/// Builds a range, rejecting duplicates.
RangeSet make_range(std::vector<CanonicalElement> elements);

bool range_contains(const RangeSet& r, const CanonicalElement& e);

/// Parses a comma-separated list of words in the declared generators, e.g.
/// "id,t,t^2" or "id,t1*t2^-1".  Unknown names and duplicates are rejected.
RangeSet parse_range(const GroupSpec& spec, const std::string& expr);

/// Property 1: R is finite, contains the identity and R.x0 spans the same
/// affine space as the full orbit.
bool has_property_1(const GroupSpec& spec, const RangeSet& r);

enum class Property2Status { No, Yes, Unknown };

/// Property 2: some R'' subset of R with Property 1 and R' = generators with
/// identity (inverses optionally included) satisfy R'R'' subset of R.  The
/// existential search over R'' is capped at subsets of size subset_cap;
/// beyond the cap the result is Unknown rather than No.
Property2Status property_2_status(const GroupSpec& spec, const RangeSet& r,
                                  int subset_cap = 12);

inline bool has_property_2(const GroupSpec& spec, const RangeSet& r) {
  return property_2_status(spec, r) == Property2Status::Yes;
}

}  // namespace korn
