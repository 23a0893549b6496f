// Shared numeric types, tolerances and small helpers.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace korn {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using IVec = Eigen::VectorXi;
using Complex = std::complex<double>;

/// Bad input: unknown structure, malformed file, invalid period, ...
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure: size guard, non-convergence, inconsistent data.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix equality tolerance for group-element identification.  Generators are
// exact to machine precision and products of <= 1e3 factors stay well below.
inline constexpr double kGroupTol = 1e-10;
// Canonical-coordinate reconstruction and integer-word matching.
inline constexpr double kWordTol = 1e-8;
// Singular values below kRankTol * sigma_max are treated as zero when
// orthonormalizing subspace bases.
inline constexpr double kRankTol = 1e-10;
// Eigenvalues below kKernelTol * lambda_max are treated as kernel modes.
inline constexpr double kKernelTol = 1e-9;

/// dist(k, Z), the distance to the nearest integer, in [0, 1/2].
inline double distance_to_nearest_integer(double k) {
  double frac = k - std::floor(k);
  return std::min(frac, 1.0 - frac);
}

/// Deterministic stream of uniform values.  mt19937_64 with a fixed 53-bit
/// mapping so that sequences are identical across standard libraries.
class UniformSampler {
 public:
  explicit UniformSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-1, 1].
  double symmetric() { return 2.0 * unit() - 1.0; }

  /// Uniform in [lo, hi).
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform integer in [0, n).
  std::uint64_t index(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

inline double frobenius_distance(const Mat& a, const Mat& b) {
  return (a - b).norm();
}

/// || R^T R - I ||_F, zero for orthogonal R.
inline double orthogonality_defect(const Mat& r) {
  return (r.transpose() * r - Mat::Identity(r.rows(), r.cols())).norm();
}

}  // namespace korn
