#include "korn/turan.hpp"

#include <cmath>
#include <limits>

namespace korn {

double turan_power_sum_ratio(const CVec& b, const CVec& z, int m) {
  const int n = static_cast<int>(z.size());
  if (n == 0 || b.size() != n) throw config_error("turan: size mismatch");
  if (m < 0) throw config_error("turan: m must be nonnegative");

  double best = 0.0;
  bool any = false;
  // z_j^nu tracked incrementally from z_j^(m+1).
  CVec zp(n);
  for (int j = 0; j < n; ++j) zp(j) = std::pow(z(j), m + 1);
  for (int nu = m + 1; nu <= m + n; ++nu) {
    Complex num = 0.0;
    double den = 0.0;
    for (int j = 0; j < n; ++j) {
      num += b(j) * zp(j);
      den += std::abs(b(j)) * std::abs(zp(j));
    }
    if (den > 0.0) {
      best = std::max(best, std::abs(num) / den);
      any = true;
    }
    zp = zp.cwiseProduct(z);
  }
  // All-zero coefficients make every ratio vacuous; the bound holds trivially.
  return any ? best : 1.0;
}

double turan_lower_bound(const CVec& z) {
  const int n = static_cast<int>(z.size());
  if (n == 0) throw config_error("turan: empty z");
  for (int j = 0; j < n; ++j)
    if (std::abs(z(j)) == 0.0) throw config_error("turan: zero z entry");
  if (n == 1) return 1.0;

  double zmax = 0.0;
  for (int j = 0; j < n; ++j) zmax = std::max(zmax, std::abs(z(j)));
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      gap = std::min(gap, std::abs(z(i) - z(j)));
  double delta = gap / zmax;
  if (delta <= 0.0) throw config_error("turan: coincident z values");
  return std::pow(delta / 2.0, n - 1) / n;
}

bool turan_lower_bound_check(const CVec& b, const CVec& z, int m) {
  return turan_power_sum_ratio(b, z, m) >= turan_lower_bound(z) - 1e-14;
}

}  // namespace korn
