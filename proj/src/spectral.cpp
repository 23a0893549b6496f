#include "korn/spectral.hpp"

#include <cmath>

namespace korn {

namespace {

constexpr double kMatchTol = 1e-12;

bool matches_chain(const GroupSpec& spec) {
  if (spec.d() != 2 || spec.d1() != 1 || spec.d2() != 1 || spec.m0() != 1 ||
      spec.coset_count() != 1 || spec.generators().size() != 1)
    return false;
  Isometry t{Mat::Identity(2, 2), Vec::Zero(2)};
  t.translation(1) = 1.0;
  return approx_equal(spec.generators()[0].map, t, kMatchTol) &&
         spec.base_point().norm() <= kMatchTol;
}

bool matches_zigzag(const GroupSpec& spec) {
  if (spec.d() != 2 || spec.d1() != 1 || spec.d2() != 1 || spec.m0() != 2 ||
      spec.coset_count() != 2 || spec.generators().size() != 1)
    return false;
  Mat a(2, 2);
  a << -1, 0, 0, 1;
  Vec b(2);
  b << 0, 1;
  Isometry t{a, b};
  Vec x0(2);
  x0 << 1, 0;
  return approx_equal(spec.generators()[0].map, t, kMatchTol) &&
         approx_equal(spec.coset_rep(1), t, kMatchTol) &&
         (spec.base_point() - x0).norm() <= kMatchTol;
}

// u(t^n) for n = 0..N-1; t^n has coset n mod 2 and lattice exponent n/2 for
// the zigzag (m0 = 2), coset 0 and exponent n for the chain.
CVec dft_coefficient(const PeriodicDisplacement& u, long freq, long period,
                     SpectralStructure which) {
  CVec acc = CVec::Zero(2);
  CanonicalElement e;
  e.exponents.resize(1);
  for (long n = 0; n < period; ++n) {
    if (which == SpectralStructure::Chain) {
      e.coset = 0;
      e.exponents(0) = static_cast<int>(n);
    } else {
      e.coset = static_cast<int>(n % 2);
      e.exponents(0) = static_cast<int>(n / 2);
    }
    double angle = 2.0 * M_PI *
                   static_cast<double>((freq * n) % period) /
                   static_cast<double>(period);
    acc += Complex(std::cos(angle), std::sin(angle)) *
           u.value(e).cast<Complex>();
  }
  return acc / static_cast<double>(period);
}

// dist(j/N, Z), exact in integer arithmetic.
double weight_k(long j, long period) {
  long m = ((j % period) + period) % period;
  return static_cast<double>(std::min(m, period - m)) /
         static_cast<double>(period);
}

// dist(j/N - 1/2, Z).
double weight_k_half(long j, long period) {
  long m = (((2 * j - period) % (2 * period)) + 2 * period) % (2 * period);
  return static_cast<double>(std::min(m, 2 * period - m)) /
         static_cast<double>(2 * period);
}

}  // namespace

std::optional<SpectralStructure> detect_spectral_structure(
    const GroupSpec& spec) {
  if (matches_chain(spec)) return SpectralStructure::Chain;
  if (matches_zigzag(spec)) return SpectralStructure::Zigzag;
  return std::nullopt;
}

double fourier_weighted_sum(const PeriodicDisplacement& u,
                            SpectralVariant variant) {
  auto which = detect_spectral_structure(*u.spec());
  if (!which)
    throw config_error(
        "fourier_weighted_sum: structure has no closed-form "
        "characterization (supported: chain, zigzag)");
  const long period = u.period();
  double total = 0.0;
  for (long j = 0; j < period; ++j) {
    CVec coeff = dft_coefficient(u, j, period, *which);
    double w1 = weight_k(j, period);
    if (*which == SpectralStructure::Chain) {
      if (variant == SpectralVariant::Grad) {
        total += w1 * w1 * coeff.squaredNorm();
      } else {
        total += std::pow(w1, 4) * std::norm(coeff(0)) +
                 w1 * w1 * std::norm(coeff(1));
      }
    } else {
      double w2 = weight_k_half(j, period);
      if (variant == SpectralVariant::Grad) {
        total += w2 * w2 * std::norm(coeff(0)) + w1 * w1 * std::norm(coeff(1));
      } else {
        double k_signed = static_cast<double>(j) / period - 0.5;
        Complex mixed =
            Complex(0.0, 2.0 * M_PI * k_signed) * coeff(0) - coeff(1);
        total += std::pow(w2, 4) * std::norm(coeff(0)) +
                 w1 * w1 * std::norm(mixed);
      }
    }
  }
  return total;
}

RangeSet spectral_reference_range(const GroupSpec& spec) {
  auto which = detect_spectral_structure(spec);
  if (!which)
    throw config_error("no spectral reference range for this structure");
  CanonicalElement t = spec.generator_element(0);
  std::vector<CanonicalElement> elements{spec.identity_element()};
  int top = *which == SpectralStructure::Chain ? 2 : 3;
  for (int n = 1; n <= top; ++n) elements.push_back(spec.pow(t, n));
  return make_range(std::move(elements));
}

}  // namespace korn
