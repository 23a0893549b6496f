#include "korn/skew.hpp"

#include <cmath>

namespace korn {

int skew_pattern_dim(int d1, int d2, SkewPattern pattern) {
  switch (pattern) {
    case SkewPattern::Full: {
      int d = d1 + d2;
      return d * (d - 1) / 2;
    }
    case SkewPattern::ZeroS3:
      return d1 * (d1 - 1) / 2 + d1 * d2;
    case SkewPattern::S1Only:
      return d1 * (d1 - 1) / 2;
  }
  return 0;
}

std::vector<Mat> skew_basis(int d, int d1, int d2, SkewPattern pattern) {
  if (d != d1 + d2 || d1 < 0 || d2 < 0)
    throw config_error("invalid (d, d1, d2) split for skew basis");

  // Pair (i, j) with i < j is kept iff it touches the allowed blocks.
  auto keep = [&](int i, int j) {
    switch (pattern) {
      case SkewPattern::Full:
        return true;
      case SkewPattern::ZeroS3:
        return i < d1;  // S1 block (i < j < d1) or S2 block (i < d1 <= j)
      case SkewPattern::S1Only:
        return j < d1;
    }
    return false;
  };

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(skew_pattern_dim(d1, d2, pattern)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      if (!keep(i, j)) continue;
      Mat s = Mat::Zero(d, d);
      s(i, j) = -inv_sqrt2;
      s(j, i) = inv_sqrt2;
      basis.push_back(std::move(s));
    }
  return basis;
}

}  // namespace korn
