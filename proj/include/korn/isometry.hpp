// Euclidean isometries (A|b) : x -> Ax + b.

#pragma once

#include "korn/numeric.hpp"

namespace korn {

struct Isometry {
  Mat rotation;     // d x d orthogonal
  Vec translation;  // d

  Isometry() = default;
  Isometry(Mat a, Vec b) : rotation(std::move(a)), translation(std::move(b)) {}

  int dim() const { return static_cast<int>(rotation.rows()); }

  static Isometry identity(int d) {
    return {Mat::Identity(d, d), Vec::Zero(d)};
  }
};

/// Group law (A1|b1)(A2|b2) = (A1 A2 | b1 + A1 b2).
Isometry compose(const Isometry& g, const Isometry& h);

/// (A|b) . x = Ax + b.
Vec act(const Isometry& g, const Vec& x);

Isometry inverse(const Isometry& g);

/// g^n for any integer n (binary powering).
Isometry power(const Isometry& g, long n);

bool approx_equal(const Isometry& a, const Isometry& b, double tol = kWordTol);

/// Throws config_error unless rotation^T rotation = I within tol (Frobenius).
void require_orthogonal(const Isometry& g, double tol = kGroupTol);

/// Canonical objective-structure form: rotation block-diagonal O(d1)+O(d2)
/// and translation supported on the last d2 coordinates.
bool has_block_form(const Isometry& g, int d1, int d2, double tol = kGroupTol);

}  // namespace korn
