#include "korn/quasidiag.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <deque>

namespace korn {

namespace {

constexpr double kInputTol = 1e-8;
constexpr double kClusterTol = 1e-8;
constexpr int kSplitRounds = 6;

Mat restrict_to(const Mat& a, const Mat& v) { return v.transpose() * a * v; }

// Splits an invariant subspace by eigenvalue clustering of a random linear
// combination of the restricted family.  Returns sub-bases (in ambient
// coordinates) or an empty list when no split was found.
std::vector<Mat> try_split(const std::vector<Mat>& family, const Mat& v,
                           UniformSampler& rng) {
  const int m = static_cast<int>(v.cols());
  Mat combo = Mat::Zero(m, m);
  for (const Mat& a : family) combo += rng.symmetric() * restrict_to(a, v);

  Eigen::EigenSolver<Mat> es(combo);
  if (es.info() != Eigen::Success) return {};
  CVec vals = es.eigenvalues();
  CMat vecs = es.eigenvectors();

  // Union-find over eigenvalue indices: lambda ~ mu or lambda ~ conj(mu)
  // belong to the same (conjugation-closed) cluster.
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (std::abs(vals(i) - vals(j)) < kClusterTol * scale ||
          std::abs(vals(i) - std::conj(vals(j))) < kClusterTol * scale)
        parent[find(i)] = find(j);
    }

  std::vector<std::vector<int>> clusters;
  std::vector<int> root_of(m, -1);
  for (int i = 0; i < m; ++i) {
    int r = find(i);
    if (root_of[r] < 0) {
      root_of[r] = static_cast<int>(clusters.size());
      clusters.emplace_back();
    }
    clusters[static_cast<std::size_t>(root_of[r])].push_back(i);
  }
  if (clusters.size() < 2) return {};

  std::vector<Mat> parts;
  for (const auto& members : clusters) {
    const int count = static_cast<int>(members.size());
    // Real span of the cluster eigenvectors; rank equals the member count
    // because the cluster is closed under conjugation.
    Mat stacked(m, 2 * count);
    for (int c = 0; c < count; ++c) {
      stacked.col(2 * c) = vecs.col(members[static_cast<std::size_t>(c)]).real();
      stacked.col(2 * c + 1) = vecs.col(members[static_cast<std::size_t>(c)]).imag();
    }
    Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeThinU);
    if (svd.singularValues()(count - 1) < 1e-8) return {};
    parts.push_back(v * svd.matrixU().leftCols(count));
  }
  return parts;
}

bool all_scalar(const std::vector<Mat>& family, const Mat& v) {
  const int m = static_cast<int>(v.cols());
  for (const Mat& a : family) {
    Mat b = restrict_to(a, v);
    double c = b.trace() / m;
    if ((b - c * Mat::Identity(m, m)).norm() > 1e-7) return false;
  }
  return true;
}

// For a subspace on which every member acts as c*I + s*J with a shared
// complex structure J (J^2 = -I), recover J from any member with s != 0.
Mat shared_complex_structure(const std::vector<Mat>& family, const Mat& v) {
  const int m = static_cast<int>(v.cols());
  for (const Mat& a : family) {
    Mat b = restrict_to(a, v);
    double c = b.trace() / m;
    Mat k = b - c * Mat::Identity(m, m);
    double s = k.norm() / std::sqrt(static_cast<double>(m));
    if (s < 1e-6) continue;
    Mat j = k / s;
    if ((j * j + Mat::Identity(m, m)).norm() > 1e-6) continue;
    if ((j + j.transpose()).norm() > 1e-6) continue;
    bool commutes = true;
    for (const Mat& other : family) {
      Mat bo = restrict_to(other, v);
      if ((bo * j - j * bo).norm() > 1e-6) {
        commutes = false;
        break;
      }
    }
    if (commutes) return j;
  }
  throw numeric_error("quasidiagonalization: no usable complex structure");
}

}  // namespace

Mat QuasiDiagonal::assemble(std::size_t i) const {
  const Factor& f = factors.at(i);
  const int n = static_cast<int>(q_matrix.rows());
  Mat block = Mat::Zero(n, n);
  int offset = static_cast<int>(f.lambda.size());
  block.topLeftCorner(offset, offset) = f.lambda.asDiagonal();
  for (double theta : f.angles) {
    block(offset, offset) = std::cos(theta);
    block(offset, offset + 1) = -std::sin(theta);
    block(offset + 1, offset) = std::sin(theta);
    block(offset + 1, offset + 1) = std::cos(theta);
    offset += 2;
  }
  return block;
}

QuasiDiagonal simultaneous_quasidiagonalize(const std::vector<Mat>& family,
                                            std::uint64_t seed) {
  if (family.empty()) throw config_error("quasidiagonalization: empty family");
  const int n = static_cast<int>(family.front().rows());
  for (const Mat& a : family) {
    if (a.rows() != n || a.cols() != n)
      throw config_error("quasidiagonalization: size mismatch");
    if (orthogonality_defect(a) > kInputTol)
      throw config_error("quasidiagonalization: non-orthogonal input");
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if ((family[i] * family[j] - family[j] * family[i]).norm() > kInputTol)
        throw config_error("quasidiagonalization: non-commuting input");

  UniformSampler rng(seed);
  std::deque<Mat> queue;
  queue.push_back(Mat::Identity(n, n));
  std::vector<Vec> axes;     // 1D invariant directions
  std::vector<Mat> planes;   // 2D rotation planes

  while (!queue.empty()) {
    Mat v = queue.front();
    queue.pop_front();
    const int m = static_cast<int>(v.cols());
    if (m == 1) {
      axes.push_back(v.col(0));
      continue;
    }

    std::vector<Mat> parts;
    for (int round = 0; round < kSplitRounds && parts.empty(); ++round)
      parts = try_split(family, v, rng);
    if (!parts.empty()) {
      for (Mat& p : parts) queue.push_back(std::move(p));
      continue;
    }

    if (all_scalar(family, v)) {
      for (int c = 0; c < m; ++c) axes.push_back(v.col(c));
      continue;
    }

    // Irreducible under random combinations: every member acts as a complex
    // scalar for one shared complex structure.  Cut into J-invariant planes.
    Mat j = shared_complex_structure(family, v);
    Mat chosen(m, 0);
    for (int c = 0; c < m && chosen.cols() < m; ++c) {
      Vec cand = Vec::Unit(m, c);
      cand -= chosen * (chosen.transpose() * cand);
      double len = cand.norm();
      if (len < 1e-6) continue;
      cand /= len;
      Vec mate = j * cand;
      mate -= cand * cand.dot(mate);
      mate.normalize();
      Mat plane(m, 2);
      plane.col(0) = cand;
      plane.col(1) = mate;
      planes.push_back(v * plane);
      Mat grown(m, chosen.cols() + 2);
      grown << chosen, plane;
      chosen = std::move(grown);
    }
    if (chosen.cols() != m)
      throw numeric_error("quasidiagonalization: plane extraction failed");
  }

  QuasiDiagonal result;
  result.rotation_blocks = static_cast<int>(planes.size());
  result.q_matrix.resize(n, n);
  int col = 0;
  for (const Vec& axis : axes) result.q_matrix.col(col++) = axis;
  for (const Mat& plane : planes) {
    result.q_matrix.col(col++) = plane.col(0);
    result.q_matrix.col(col++) = plane.col(1);
  }
  if (col != n) throw numeric_error("quasidiagonalization: basis incomplete");
  if (orthogonality_defect(result.q_matrix) > 1e-8)
    throw numeric_error("quasidiagonalization: assembled Q not orthogonal");

  const int n_lambda = n - 2 * result.rotation_blocks;
  for (const Mat& a : family) {
    Mat t = restrict_to(a, result.q_matrix);
    QuasiDiagonal::Factor f;
    f.lambda = t.diagonal().head(n_lambda);
    for (int b = 0; b < result.rotation_blocks; ++b) {
      int r = n_lambda + 2 * b;
      f.angles.push_back(std::atan2(t(r + 1, r), t(r, r)));
      if (f.angles.back() < 0) f.angles.back() += 2.0 * M_PI;
    }
    result.factors.push_back(std::move(f));
  }

  for (std::size_t i = 0; i < family.size(); ++i) {
    for (int k = 0; k < n_lambda; ++k)
      if (std::abs(std::abs(result.factors[i].lambda(k)) - 1.0) > 1e-8)
        throw numeric_error("quasidiagonalization: diagonal entry not +-1");
    Mat t = restrict_to(family[i], result.q_matrix);
    if ((t - result.assemble(i)).norm() > 1e-8)
      throw numeric_error("quasidiagonalization: reconstruction failed");
  }
  return result;
}

}  // namespace korn
