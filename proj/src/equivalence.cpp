#include "korn/equivalence.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace korn {

namespace {

constexpr double kPrincipalAngleTol = 1e-6;

bool kernels_match(const Mat& ka, const Mat& kb) {
  if (ka.cols() != kb.cols()) return false;
  if (ka.cols() == 0) return true;
  Eigen::JacobiSVD<Mat> svd(ka.transpose() * kb);
  double smallest = svd.singularValues().minCoeff();
  double angle = std::acos(std::clamp(smallest, -1.0, 1.0));
  return angle < kPrincipalAngleTol;
}

// Orthonormal basis of the complement of span(ka) + span(kb).
Mat joint_kernel_complement(const Mat& ka, const Mat& kb, long size) {
  long total = ka.cols() + kb.cols();
  if (total == 0) return Mat::Identity(size, size);
  Mat stacked(size, total);
  if (ka.cols() > 0) stacked.leftCols(ka.cols()) = ka;
  if (kb.cols() > 0) stacked.rightCols(kb.cols()) = kb;
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeFullU);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-7) ++rank;
  return svd.matrixU().rightCols(size - rank);
}

}  // namespace

EquivalenceReport compare(const GroupSpec& spec, const NormOnRange& a,
                          const NormOnRange& b, long period) {
  Mat qa = quadratic_form(spec, a.range, a.kind, period);
  Mat qb = quadratic_form(spec, b.range, b.kind, period);
  KernelBasis ker_a = form_kernel(qa, period);
  KernelBasis ker_b = form_kernel(qb, period);

  EquivalenceReport report;
  report.period = period;
  report.dim_ker_a = ker_a.dimension;
  report.dim_ker_b = ker_b.dimension;
  report.kernels_equal = kernels_match(ker_a.vectors, ker_b.vectors);

  Mat complement =
      joint_kernel_complement(ker_a.vectors, ker_b.vectors, qa.rows());
  if (complement.cols() == 0) {
    report.c_min = report.c_max = 1.0;
    return report;
  }
  Mat qa_r = complement.transpose() * qa * complement;
  Mat qb_r = complement.transpose() * qb * complement;
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> pencil(qb_r, qa_r);
  if (pencil.info() != Eigen::Success)
    throw numeric_error("compare: pencil solve failed");
  report.c_min = pencil.eigenvalues().minCoeff();
  report.c_max = pencil.eigenvalues().maxCoeff();

  if (qa.rows() > 2000) {
    auto [lo, hi] = rayleigh_sample_extremes(qa, qb, complement, 200, 7231);
    report.c_min = std::min(report.c_min, lo);
    report.c_max = std::max(report.c_max, hi);
  }
  if (!report.kernels_equal) report.c_min = 0.0;
  return report;
}

const char* to_string(GrowthDiagnosis d) {
  switch (d) {
    case GrowthDiagnosis::Bounded:
      return "bounded";
    case GrowthDiagnosis::Growing:
      return "growing";
    case GrowthDiagnosis::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

SweepResult sweep(const GroupSpec& spec, const NormOnRange& a,
                  const NormOnRange& b, const std::vector<long>& periods) {
  if (periods.empty()) throw config_error("sweep: empty period list");
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (periods[i] % spec.m0() != 0 || periods[i] <= 0)
      throw config_error("sweep: periods must be positive multiples of m0");
    if (i > 0 && periods[i] <= periods[i - 1])
      throw config_error("sweep: periods must be ascending");
  }

  SweepResult result;
  for (long n : periods) result.reports.push_back(compare(spec, a, b, n));

  // Log-log least squares for c_max(N) ~ N^p.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& report : result.reports) {
    if (report.c_max <= 0.0) continue;
    double x = std::log(static_cast<double>(report.period));
    double y = std::log(report.c_max);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count >= 2 && sxx * count - sx * sx > 1e-12) {
    result.growth_exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  } else {
    result.growth_exponent = 0.0;
  }
  if (result.growth_exponent < 0.2)
    result.diagnosis = GrowthDiagnosis::Bounded;
  else if (result.growth_exponent > 0.5)
    result.diagnosis = GrowthDiagnosis::Growing;
  else
    result.diagnosis = GrowthDiagnosis::Inconclusive;
  return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "N,c_min,c_max,dim_ker_a,dim_ker_b,kernels_equal\n";
  char buf[40];
  for (const auto& r : result.reports) {
    out << r.period;
    std::snprintf(buf, sizeof(buf), "%.17g", r.c_min);
    out << "," << buf;
    std::snprintf(buf, sizeof(buf), "%.17g", r.c_max);
    out << "," << buf << "," << r.dim_ker_a << "," << r.dim_ker_b << ","
        << (r.kernels_equal ? "true" : "false") << "\n";
  }
  std::snprintf(buf, sizeof(buf), "%.17g", result.growth_exponent);
  out << "{\"growth_exponent\":" << buf << ",\"diagnosis\":\""
      << to_string(result.diagnosis) << "\"}\n";
}

std::pair<double, double> rayleigh_sample_extremes(const Mat& q_a,
                                                   const Mat& q_b,
                                                   const Mat& complement,
                                                   int trials,
                                                   std::uint64_t seed) {
  if (complement.cols() == 0) return {1.0, 1.0};
  UniformSampler rng(seed);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  Vec coeff(complement.cols());
  for (int trial = 0; trial < trials; ++trial) {
    for (int i = 0; i < coeff.size(); ++i) coeff(i) = rng.symmetric();
    Vec x = complement * coeff;
    double denom = x.dot(q_a * x);
    if (denom <= 0.0) continue;
    double ratio = x.dot(q_b * x) / denom;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  if (!std::isfinite(lo)) lo = 0.0;
  return {lo, hi};
}

}  // namespace korn
