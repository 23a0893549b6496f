// Simultaneous orthogonal reduction of a commuting family of orthogonal
// matrices to +-1 diagonal plus shared 2x2 rotation blocks:
//     Q^T A Q = Lambda(A) + R(theta_1(A)) + ... + R(theta_q(A))
// with one Q and one q for the whole family.

#pragma once

#include "korn/numeric.hpp"

#include <vector>

namespace korn {

struct QuasiDiagonal {
  Mat q_matrix;        // shared orthogonal Q
  int rotation_blocks = 0;  // q

  struct Factor {
    Vec lambda;                  // n - 2q diagonal entries, each ~ +-1
    std::vector<double> angles;  // q rotation angles in [0, 2*pi)
  };
  std::vector<Factor> factors;   // aligned with the input family

  /// Lambda(A_i) + R(theta_1) + ... assembled from the stored data.
  Mat assemble(std::size_t i) const;
};

/// Decomposes the family.  Throws config_error when the inputs are not
/// orthogonal or not pairwise commuting (tolerance 1e-8), numeric_error when
/// the reduction cannot be certified to 1e-8.
QuasiDiagonal simultaneous_quasidiagonalize(const std::vector<Mat>& family,
                                            std::uint64_t seed = 20240901);

}  // namespace korn
