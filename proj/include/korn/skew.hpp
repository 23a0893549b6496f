// Skew-symmetric matrix patterns used by the rigidity subspaces.
//
// In the (d1, d2) block split a skew matrix reads
//     S = ( S1   S2 )      S1 in Skew(d1), S2 in R^{d1 x d2},
//         (-S2^T S3 )      S3 in Skew(d2).
// Full keeps all of Skew(d), ZeroS3 forces S3 = 0, S1Only forces S2 = S3 = 0.

#pragma once

#include "korn/numeric.hpp"

#include <vector>

namespace korn {

enum class SkewPattern { Full, ZeroS3, S1Only };

/// Dimension of the selected pattern.
int skew_pattern_dim(int d1, int d2, SkewPattern pattern);

/// Linearly independent skew matrices spanning the pattern, orthonormal in
/// the Frobenius inner product, in lexicographic (i, j) order, i < j.
std::vector<Mat> skew_basis(int d, int d1, int d2, SkewPattern pattern);

}  // namespace korn
