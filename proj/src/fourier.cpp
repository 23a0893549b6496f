#include "korn/fourier.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

namespace korn {

namespace {

long power_long(long base, int exp) {
  long result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

std::vector<Character> lattice_characters(int d2, long reps) {
  std::vector<Character> chis;
  long count = power_long(reps, d2);
  chis.reserve(static_cast<std::size_t>(count));
  for (long idx = 0; idx < count; ++idx) {
    Character chi;
    chi.wave.resize(static_cast<std::size_t>(d2));
    long rest = idx;
    for (int i = d2 - 1; i >= 0; --i) {
      chi.wave[static_cast<std::size_t>(i)] =
          Rational::reduced(rest % reps, reps);
      rest /= reps;
    }
    chis.push_back(std::move(chi));
  }
  return chis;
}

}  // namespace

Rational Rational::reduced(long num, long den) {
  if (den <= 0) throw config_error("rational: nonpositive denominator");
  num %= den;
  if (num < 0) num += den;
  long g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

Complex Character::operator()(const IVec& exponents) const {
  if (static_cast<std::size_t>(exponents.size()) != wave.size())
    throw config_error("character: exponent length mismatch");
  double turns = 0.0;  // sum of exact fractional parts of k.a
  for (std::size_t i = 0; i < wave.size(); ++i) {
    long t = (wave[i].num * exponents(static_cast<int>(i))) % wave[i].den;
    if (t < 0) t += wave[i].den;
    turns += static_cast<double>(t) / static_cast<double>(wave[i].den);
  }
  double angle = 2.0 * M_PI * turns;
  return {std::cos(angle), std::sin(angle)};
}

bool Character::periodic_for(long reps) const {
  for (const Rational& k : wave)
    if ((k.num * reps) % k.den != 0) return false;
  return true;
}

std::vector<Character> periodic_characters(const GroupSpec& spec,
                                           long period) {
  if (period <= 0 || period % spec.m0() != 0)
    throw config_error("period must be a positive multiple of m0");
  return lattice_characters(spec.d2(), period / spec.m0());
}

LatticeField::LatticeField(int d, int d2, long reps)
    : d_(d), d2_(d2), reps_(reps) {
  if (d <= 0 || d2 < 0 || reps <= 0)
    throw config_error("lattice field: invalid shape");
  values_ = CMat::Zero(d, power_long(reps, d2));
}

LatticeField LatticeField::random(int d, int d2, long reps,
                                  std::uint64_t seed) {
  LatticeField f(d, d2, reps);
  UniformSampler rng(seed);
  for (long site = 0; site < f.site_count(); ++site)
    for (int comp = 0; comp < d; ++comp)
      f.values_(comp, site) = {rng.symmetric(), rng.symmetric()};
  return f;
}

LatticeField LatticeField::from_coset(const PeriodicDisplacement& u,
                                      int coset) {
  const GroupSpec& spec = *u.spec();
  if (coset < 0 || coset >= spec.coset_count())
    throw config_error("from_coset: coset index out of range");
  LatticeField f(spec.d(), spec.d2(), u.reps());
  CanonicalElement e;
  e.coset = coset;
  for (long site = 0; site < f.site_count(); ++site) {
    e.exponents = f.exponents_of(site);
    f.values_.col(site) = u.value(e).cast<Complex>();
  }
  return f;
}

long LatticeField::site_of(const IVec& exponents) const {
  if (exponents.size() != d2_)
    throw config_error("lattice field: exponent length mismatch");
  long site = 0;
  for (int i = 0; i < d2_; ++i) {
    long a = ((exponents(i) % reps_) + reps_) % reps_;
    site = site * reps_ + a;
  }
  return site;
}

IVec LatticeField::exponents_of(long site) const {
  IVec a(d2_);
  for (int i = d2_ - 1; i >= 0; --i) {
    a(i) = static_cast<int>(site % reps_);
    site /= reps_;
  }
  return a;
}

LatticeField LatticeField::lift(long reps) const {
  if (reps % reps_ != 0)
    throw config_error("lattice lift target must be a multiple");
  LatticeField out(d_, d2_, reps);
  for (long site = 0; site < out.site_count(); ++site)
    out.values_.col(site) = value(out.exponents_of(site));
  return out;
}

CVec transform(const LatticeField& f, const Character& chi) {
  if (static_cast<int>(chi.wave.size()) != f.d2())
    throw config_error("transform: wave vector length mismatch");
  if (!chi.periodic_for(f.reps()))
    throw config_error("transform: character and field share no period");
  CVec acc = CVec::Zero(f.d());
  for (long site = 0; site < f.site_count(); ++site)
    acc += chi(f.exponents_of(site)) * f.values().col(site);
  return acc / static_cast<double>(f.site_count());
}

LatticeField inverse_transform(const std::vector<Character>& chis,
                               const std::vector<CVec>& coeffs, int d, int d2,
                               long reps) {
  if (chis.size() != coeffs.size())
    throw config_error("inverse_transform: size mismatch");
  LatticeField f(d, d2, reps);
  for (long site = 0; site < f.site_count(); ++site) {
    IVec a = f.exponents_of(site);
    CVec acc = CVec::Zero(d);
    for (std::size_t i = 0; i < chis.size(); ++i)
      acc += std::conj(chis[i](a)) * coeffs[i];
    f.values().col(site) = acc;
  }
  return f;
}

Complex inner_product(const LatticeField& f, const LatticeField& g) {
  if (f.d() != g.d() || f.d2() != g.d2())
    throw config_error("lattice inner product: shape mismatch");
  long common = std::lcm(f.reps(), g.reps());
  if (f.reps() != common || g.reps() != common)
    return inner_product(f.lift(common), g.lift(common));
  Complex sum =
      f.values().cwiseProduct(g.values().conjugate()).sum();
  return sum / static_cast<double>(f.site_count());
}

double plancherel_residual(const LatticeField& f, const LatticeField& g) {
  long common = std::lcm(f.reps(), g.reps());
  LatticeField fl = f.reps() == common ? f : f.lift(common);
  LatticeField gl = g.reps() == common ? g : g.lift(common);
  Complex direct = inner_product(fl, gl);
  Complex spectral = 0.0;
  for (const Character& chi : lattice_characters(fl.d2(), common)) {
    CVec fc = transform(fl, chi);
    CVec gc = transform(gl, chi);
    spectral += fc.cwiseProduct(gc.conjugate()).sum();
  }
  return std::abs(direct - spectral);
}

double translation_property_residual(const LatticeField& f, const IVec& shift,
                                     const Character& chi) {
  LatticeField shifted(f.d(), f.d2(), f.reps());
  for (long site = 0; site < f.site_count(); ++site) {
    IVec a = f.exponents_of(site);
    shifted.values().col(site) = f.value((a + shift).eval());
  }
  CVec lhs = transform(shifted, chi);
  CVec rhs = std::conj(chi(shift)) * transform(f, chi);
  return (lhs - rhs).norm();
}

void write_spectrum_csv(const LatticeField& f, std::ostream& out) {
  for (int i = 1; i <= f.d2(); ++i) out << (i > 1 ? "," : "") << "k_" << i;
  for (int i = 1; i <= f.d(); ++i)
    out << (f.d2() > 0 || i > 1 ? "," : "") << "re(u_" << i << "),im(u_" << i
        << ")";
  out << "\n";
  char buf[40];
  auto put = [&](double x, bool lead_comma) {
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    if (lead_comma) out << ",";
    out << buf;
  };
  for (const Character& chi : lattice_characters(f.d2(), f.reps())) {
    CVec coeff = transform(f, chi);
    bool first = true;
    for (const Rational& k : chi.wave) {
      put(k.value(), !first);
      first = false;
    }
    for (int i = 0; i < f.d(); ++i) {
      put(coeff(i).real(), !first);
      first = false;
      put(coeff(i).imag(), true);
    }
    out << "\n";
  }
}

}  // namespace korn
