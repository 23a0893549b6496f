// Closed-form Fourier characterizations for the two worked 1-D structures:
// the straight chain t = (I2|e2), x0 = 0 and the zigzag chain
// t = (diag(-1,1)|e2), x0 = e1.  The weighted spectral sums below are
// equivalent to ||nabla_R u||_2^2 (Grad variant) and ||u||_R^2 (Seminorm
// variant) with N-independent constants.

#pragma once

#include "korn/field.hpp"

#include <optional>

namespace korn {

enum class SpectralStructure { Chain, Zigzag };
enum class SpectralVariant { Grad, Seminorm };

/// Recognizes the two supported structures (exact generator match).
std::optional<SpectralStructure> detect_spectral_structure(
    const GroupSpec& spec);

/// The weighted spectral sum over the characters chi_k of G = <t>, k = j/N:
///   Chain/Grad:        sum |k|^2 ||u^(chi_k)||^2
///   Chain/Seminorm:    sum |k|^4 |u1^|^2 + |k|^2 |u2^|^2
///   Zigzag/Grad:       sum |k-1/2|^2 |u1^|^2 + |k|^2 |u2^|^2
///   Zigzag/Seminorm:   sum |k-1/2|^4 |u1^|^2
///                          + |k|^2 |2 pi i (k-1/2) u1^ - u2^|^2
/// with |.| the distance to the nearest integer.  Throws config_error for
/// unsupported structures.
double fourier_weighted_sum(const PeriodicDisplacement& u,
                            SpectralVariant variant);

/// The reference range used by the characterizations: {id,t,t^2} for the
/// chain, {id,t,t^2,t^3} for the zigzag.
RangeSet spectral_reference_range(const GroupSpec& spec);

}  // namespace korn
