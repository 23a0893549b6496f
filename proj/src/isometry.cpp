#include "korn/isometry.hpp"

namespace korn {

namespace {

void require_same_dim(const Isometry& g, const Isometry& h) {
  if (g.dim() != h.dim())
    throw config_error("isometry dimension mismatch: " +
                       std::to_string(g.dim()) + " vs " +
                       std::to_string(h.dim()));
}

}  // namespace

Isometry compose(const Isometry& g, const Isometry& h) {
  require_same_dim(g, h);
  return {g.rotation * h.rotation, g.translation + g.rotation * h.translation};
}

Vec act(const Isometry& g, const Vec& x) {
  if (x.size() != g.dim())
    throw config_error("isometry/point dimension mismatch");
  return g.rotation * x + g.translation;
}

Isometry inverse(const Isometry& g) {
  Mat rt = g.rotation.transpose();
  return {rt, -(rt * g.translation)};
}

Isometry power(const Isometry& g, long n) {
  if (n < 0) return power(inverse(g), -n);
  Isometry result = Isometry::identity(g.dim());
  Isometry base = g;
  while (n > 0) {
    if (n & 1) result = compose(result, base);
    base = compose(base, base);
    n >>= 1;
  }
  return result;
}

bool approx_equal(const Isometry& a, const Isometry& b, double tol) {
  if (a.dim() != b.dim()) return false;
  return (a.rotation - b.rotation).norm() <= tol &&
         (a.translation - b.translation).norm() <= tol;
}

void require_orthogonal(const Isometry& g, double tol) {
  double defect = orthogonality_defect(g.rotation);
  if (!(defect <= tol))
    throw config_error("rotation part is not orthogonal (defect " +
                       std::to_string(defect) + ")");
}

bool has_block_form(const Isometry& g, int d1, int d2, double tol) {
  if (g.dim() != d1 + d2) return false;
  double off = 0.0;
  if (d1 > 0 && d2 > 0) {
    off = std::hypot(g.rotation.topRightCorner(d1, d2).norm(),
                     g.rotation.bottomLeftCorner(d2, d1).norm());
  }
  double head = d1 > 0 ? g.translation.head(d1).norm() : 0.0;
  return off <= tol && head <= tol;
}

}  // namespace korn
