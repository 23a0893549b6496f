#include "korn/seminorm.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace korn {

namespace {

// Precomputed per-range data shared by the evaluation paths.
struct RangeCache {
  std::vector<CanonicalElement> h;
  std::vector<Mat> rot_t;  // rot(h)^T
  Mat projector_basis;     // orthonormal columns; may be empty
};

RangeCache make_cache(const GroupSpec& spec, const RangeSet& r,
                      SeminormKind kind) {
  if (r.elements.empty()) throw config_error("seminorm: empty range");
  RangeCache cache;
  for (const auto& h : r.elements) {
    cache.h.push_back(h);
    cache.rot_t.push_back(spec.rotation_of(h).transpose());
  }
  if (auto space = seminorm_projector(kind))
    cache.projector_basis = build_subspace(spec, r, *space).columns;
  else
    cache.projector_basis = Mat(spec.d() * static_cast<int>(r.size()), 0);
  return cache;
}

// Distance via the explicit residual (I - B B^T) p, re-projected once; the
// norm-difference formula loses half the digits near the subspace.
double patch_distance_sq(const RangeCache& cache, const Vec& patch) {
  const Mat& basis = cache.projector_basis;
  if (basis.cols() == 0) return patch.squaredNorm();
  Vec residual = patch - basis * (basis.transpose() * patch);
  residual -= basis * (basis.transpose() * residual);
  return residual.squaredNorm();
}

}  // namespace

double seminorm(const PeriodicDisplacement& u, const RangeSet& r,
                SeminormKind kind) {
  const GroupSpec& spec = *u.spec();
  RangeCache cache = make_cache(spec, r, kind);
  const int d = spec.d();
  const int slots = static_cast<int>(r.size());
  const bool grad = uses_gradient(kind);

  double acc = 0.0;
  Vec patch(d * slots);
  for (long site = 0; site < u.site_count(); ++site) {
    CanonicalElement g = u.element_of(site);
    Vec ug = u.values().col(site);
    for (int i = 0; i < slots; ++i) {
      Vec piece = u.value(spec.multiply(g, cache.h[static_cast<std::size_t>(i)]));
      if (grad) piece -= cache.rot_t[static_cast<std::size_t>(i)] * ug;
      patch.segment(i * d, d) = piece;
    }
    acc += patch_distance_sq(cache, patch);
  }
  return std::sqrt(acc / static_cast<double>(u.site_count()));
}

Mat quadratic_form(const GroupSpec& spec, const RangeSet& r, SeminormKind kind,
                   long period) {
  RangeCache cache = make_cache(spec, r, kind);
  const int d = spec.d();
  const int slots = static_cast<int>(r.size());
  SiteIndexer layout(spec, period);
  const long sites = layout.site_count();
  const long size = d * sites;
  if (size > 20000)
    throw numeric_error("quadratic_form: size " + std::to_string(size) +
                        " exceeds the 20000 guard");

  // Local patch form I - B B^T, then scattered over the field blocks.
  const Mat& basis = cache.projector_basis;
  Mat local = Mat::Identity(d * slots, d * slots);
  if (basis.cols() > 0) local -= basis * basis.transpose();

  const bool grad = uses_gradient(kind);
  Mat q = Mat::Zero(size, size);
  // Per slot the patch entry is u(g h_i) and, for gradient kinds, an extra
  // -rot(h_i)^T u(g); expand both products into site blocks.
  std::vector<long> target(static_cast<std::size_t>(slots));
  for (long site = 0; site < sites; ++site) {
    CanonicalElement g = layout.element_of(site);
    for (int i = 0; i < slots; ++i)
      target[static_cast<std::size_t>(i)] =
          layout.site_of(spec.multiply(g, cache.h[static_cast<std::size_t>(i)]));
    for (int i = 0; i < slots; ++i) {
      for (int j = 0; j < slots; ++j) {
        const Mat m = local.block(i * d, j * d, d, d);
        const long ti = target[static_cast<std::size_t>(i)];
        const long tj = target[static_cast<std::size_t>(j)];
        q.block(ti * d, tj * d, d, d) += m;
        if (grad) {
          const Mat& ri = cache.rot_t[static_cast<std::size_t>(i)];
          const Mat& rj = cache.rot_t[static_cast<std::size_t>(j)];
          q.block(ti * d, site * d, d, d) -= m * rj;
          q.block(site * d, tj * d, d, d) -= ri.transpose() * m;
          q.block(site * d, site * d, d, d) += ri.transpose() * m * rj;
        }
      }
    }
  }
  q /= static_cast<double>(sites);
  return 0.5 * (q + q.transpose());
}

KernelBasis form_kernel(const Mat& q, long period) {
  Eigen::SelfAdjointEigenSolver<Mat> es(q);
  if (es.info() != Eigen::Success)
    throw numeric_error("kernel: eigen decomposition failed");
  const Vec& vals = es.eigenvalues();
  double lambda_max = vals(vals.size() - 1);
  KernelBasis result;
  result.period = period;
  if (lambda_max <= 0.0) {
    result.dimension = static_cast<int>(vals.size());
    result.vectors = es.eigenvectors();
    return result;
  }
  double cutoff = kKernelTol * lambda_max;
  int dim = 0;
  while (dim < vals.size() && vals(dim) < cutoff) ++dim;
  result.dimension = dim;
  result.vectors = es.eigenvectors().leftCols(dim);
  return result;
}

KernelBasis kernel(const GroupSpec& spec, const RangeSet& r, SeminormKind kind,
                   long period) {
  return form_kernel(quadratic_form(spec, r, kind, period), period);
}

std::vector<PeriodicDisplacement> kernel_fields(GroupSpecPtr spec,
                                                const RangeSet& r,
                                                SeminormKind kind,
                                                long period) {
  KernelBasis basis = kernel(*spec, r, kind, period);
  std::vector<PeriodicDisplacement> fields;
  fields.reserve(static_cast<std::size_t>(basis.dimension));
  for (int i = 0; i < basis.dimension; ++i)
    fields.push_back(
        PeriodicDisplacement::from_flat(spec, period, basis.vectors.col(i)));
  return fields;
}

}  // namespace korn
