// Local rigidity subspaces of patch space {u : R -> R^d} and the seminorm
// family built on them.
//
//   Trans : h -> rot(h)^T a                      a in R^d
//   Rot   : h -> rot(h)^T S (h.x0 - x0)          S in Skew(d)
//   Rot0  : same, S in Skew_{0,d2}(d)            (S3 = 0)
//   Rot00 : same, S = S1 + 0_{d2,d2}             (S2 = S3 = 0)
//   Iso*  : Trans + matching Rot*

#pragma once

#include "korn/range_set.hpp"
#include "korn/skew.hpp"

#include <optional>

namespace korn {

enum class SubspaceKind { Trans, Rot, Rot0, Rot00, Iso, Iso0, Iso00 };

enum class SeminormKind {
  PatchIso,    // ||.||_R      patch distance to Iso
  PatchIso0,   // ||.||_{R,0}  patch distance to Iso0
  PatchIso00,  // patch distance to Iso00
  GradRot,     // stencil distance to Rot
  GradRot0,    // stencil distance to Rot0
  GradRot00,   // stencil distance to Rot00
  GradPlain,   // ||nabla_R .||_2, no projection
};

std::string to_string(SeminormKind kind);
/// Accepts the kebab-case CLI names: patch-iso, patch-iso0, patch-iso00,
/// grad-rot, grad-rot0, grad-rot00, grad-plain.
SeminormKind seminorm_kind_from_string(const std::string& name);

/// Subspace whose distance the kind measures; empty for GradPlain.
std::optional<SubspaceKind> seminorm_projector(SeminormKind kind);
/// True for the kinds evaluated on the discrete derivative stencil.
bool uses_gradient(SeminormKind kind);

struct SubspaceBasis {
  RangeSet range;
  SubspaceKind kind;
  Mat columns;  // orthonormal, (d * |R|) x rank, slots in range order

  int rank() const { return static_cast<int>(columns.cols()); }
};

/// Orthonormal basis via rank-revealing SVD (cutoff 1e-10 * sigma_max).
SubspaceBasis build_subspace(const GroupSpec& spec, const RangeSet& r,
                             SubspaceKind kind);

/// Closed-form dimension valid whenever R has Property 1, in terms of
/// daff, d3 = d - daff and d4 = daff - d2.
int expected_subspace_dim(const GroupSpec& spec, SubspaceKind kind);

}  // namespace korn
