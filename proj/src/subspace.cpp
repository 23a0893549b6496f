#include "korn/subspace.hpp"

#include <Eigen/SVD>

#include <array>

namespace korn {

namespace {

struct KindName {
  SeminormKind kind;
  const char* name;
};

constexpr std::array<KindName, 7> kKindNames = {{
    {SeminormKind::PatchIso, "patch-iso"},
    {SeminormKind::PatchIso0, "patch-iso0"},
    {SeminormKind::PatchIso00, "patch-iso00"},
    {SeminormKind::GradRot, "grad-rot"},
    {SeminormKind::GradRot0, "grad-rot0"},
    {SeminormKind::GradRot00, "grad-rot00"},
    {SeminormKind::GradPlain, "grad-plain"},
}};

SkewPattern rotation_pattern(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::Rot:
    case SubspaceKind::Iso:
      return SkewPattern::Full;
    case SubspaceKind::Rot0:
    case SubspaceKind::Iso0:
      return SkewPattern::ZeroS3;
    default:
      return SkewPattern::S1Only;
  }
}

bool has_translation_part(SubspaceKind kind) {
  return kind == SubspaceKind::Trans || kind == SubspaceKind::Iso ||
         kind == SubspaceKind::Iso0 || kind == SubspaceKind::Iso00;
}

bool has_rotation_part(SubspaceKind kind) {
  return kind != SubspaceKind::Trans;
}

}  // namespace

std::string to_string(SeminormKind kind) {
  for (const auto& entry : kKindNames)
    if (entry.kind == kind) return entry.name;
  return "?";
}

SeminormKind seminorm_kind_from_string(const std::string& name) {
  for (const auto& entry : kKindNames)
    if (name == entry.name) return entry.kind;
  throw config_error("unknown seminorm kind '" + name + "'");
}

std::optional<SubspaceKind> seminorm_projector(SeminormKind kind) {
  switch (kind) {
    case SeminormKind::PatchIso:
      return SubspaceKind::Iso;
    case SeminormKind::PatchIso0:
      return SubspaceKind::Iso0;
    case SeminormKind::PatchIso00:
      return SubspaceKind::Iso00;
    case SeminormKind::GradRot:
      return SubspaceKind::Rot;
    case SeminormKind::GradRot0:
      return SubspaceKind::Rot0;
    case SeminormKind::GradRot00:
      return SubspaceKind::Rot00;
    case SeminormKind::GradPlain:
      return std::nullopt;
  }
  return std::nullopt;
}

bool uses_gradient(SeminormKind kind) {
  return kind == SeminormKind::GradRot || kind == SeminormKind::GradRot0 ||
         kind == SeminormKind::GradRot00 || kind == SeminormKind::GradPlain;
}

SubspaceBasis build_subspace(const GroupSpec& spec, const RangeSet& r,
                             SubspaceKind kind) {
  if (r.elements.empty()) throw config_error("build_subspace: empty range");
  const int d = spec.d();
  const int slots = static_cast<int>(r.size());

  std::vector<Mat> rot_t;
  std::vector<Vec> arm;  // h.x0 - x0
  rot_t.reserve(r.size());
  arm.reserve(r.size());
  for (const auto& h : r.elements) {
    rot_t.push_back(spec.rotation_of(h).transpose());
    arm.push_back(spec.point(h) - spec.base_point());
  }

  std::vector<Vec> raw;
  if (has_translation_part(kind)) {
    for (int b = 0; b < d; ++b) {
      Vec col(d * slots);
      for (int i = 0; i < slots; ++i)
        col.segment(i * d, d) = rot_t[static_cast<std::size_t>(i)].col(b);
      raw.push_back(std::move(col));
    }
  }
  if (has_rotation_part(kind)) {
    for (const Mat& s :
         skew_basis(d, spec.d1(), spec.d2(), rotation_pattern(kind))) {
      Vec col(d * slots);
      for (int i = 0; i < slots; ++i)
        col.segment(i * d, d) =
            rot_t[static_cast<std::size_t>(i)] *
            (s * arm[static_cast<std::size_t>(i)]);
      raw.push_back(std::move(col));
    }
  }

  SubspaceBasis basis{r, kind, Mat(d * slots, 0)};
  if (raw.empty()) return basis;
  Mat stacked(d * slots, static_cast<Eigen::Index>(raw.size()));
  for (std::size_t c = 0; c < raw.size(); ++c)
    stacked.col(static_cast<Eigen::Index>(c)) = raw[c];
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeThinU);
  double cutoff = kRankTol * svd.singularValues()(0);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++rank;
  basis.columns = svd.matrixU().leftCols(rank);
  return basis;
}

int expected_subspace_dim(const GroupSpec& spec, SubspaceKind kind) {
  const int d = spec.d();
  const int d2 = spec.d2();
  const int daff = spec.affine_dim();
  const int d3 = d - daff;
  const int d4 = daff - d2;
  int rot = 0;
  switch (rotation_pattern(kind)) {
    case SkewPattern::Full:
      rot = daff * (2 * d - daff - 1) / 2;
      break;
    case SkewPattern::ZeroS3:
      rot = d3 * daff + d4 * (daff + d2 - 1) / 2;
      break;
    case SkewPattern::S1Only:
      rot = d4 * (d3 + spec.d1() - 1) / 2;
      break;
  }
  int trans = has_translation_part(kind) ? d : 0;
  if (!has_rotation_part(kind)) rot = 0;
  return trans + rot;
}

}  // namespace korn
