// Characters of T^m0 and the group Fourier transform
//     f^(chi) = (1/|T^m0 ∩ C_N|) sum_g chi(g) f(g)
// on T^N-periodic fields, together with the Plancherel identity and the
// translated-function rule  (f(.g))^(chi) = chi(g^{-1}) f^(chi).

#pragma once

#include "korn/field.hpp"

#include <iosfwd>

namespace korn {

/// Exact rational in [0, 1), reduced.
struct Rational {
  long num = 0;
  long den = 1;

  static Rational reduced(long num, long den);
  double value() const { return static_cast<double>(num) / den; }
};

/// chi_k(t1^a1 ... td2^ad2) = exp(2 pi i k.a) for a rational wave vector k.
struct Character {
  std::vector<Rational> wave;  // length d2, entries in [0, 1)

  Complex operator()(const IVec& exponents) const;
  /// T^N-periodic for N = reps * m0 iff every k_i * reps is an integer.
  bool periodic_for(long reps) const;
};

/// All T^N-periodic characters, k_i in {0, 1/kN, ..., (kN-1)/kN} with
/// kN = N/m0, lexicographic; count = kN^d2.
std::vector<Character> periodic_characters(const GroupSpec& spec, long period);

/// Complex d-vector field on the exponent lattice (Z / reps)^d2, i.e. a
/// T^N-periodic function on T^m0.
class LatticeField {
 public:
  LatticeField(int d, int d2, long reps);
  static LatticeField random(int d, int d2, long reps, std::uint64_t seed);
  /// Restriction g -> u(c g) of a periodic displacement to one coset sheet.
  static LatticeField from_coset(const PeriodicDisplacement& u, int coset);

  int d() const { return d_; }
  int d2() const { return d2_; }
  long reps() const { return reps_; }
  long site_count() const { return values_.cols(); }

  CMat& values() { return values_; }
  const CMat& values() const { return values_; }

  long site_of(const IVec& exponents) const;  // reduced mod reps
  IVec exponents_of(long site) const;
  CVec value(const IVec& exponents) const {
    return values_.col(site_of(exponents));
  }

  /// Same field on the lattice of `reps` representatives per direction
  /// (a multiple of the current one).
  LatticeField lift(long reps) const;

 private:
  int d_ = 0, d2_ = 0;
  long reps_ = 1;
  CMat values_;
};

/// Fourier coefficient; requires chi to be periodic for the field's lattice.
CVec transform(const LatticeField& f, const Character& chi);

/// f(a) = sum_chi conj(chi(a)) f^(chi) over the periodic characters.
LatticeField inverse_transform(const std::vector<Character>& chis,
                               const std::vector<CVec>& coeffs, int d, int d2,
                               long reps);

/// (1/sites) sum_a <f(a), g(a)>.
Complex inner_product(const LatticeField& f, const LatticeField& g);

/// | <f,g> - sum_chi <f^(chi), g^(chi)> |.
double plancherel_residual(const LatticeField& f, const LatticeField& g);

/// || (f(.g))^(chi) - chi(g^{-1}) f^(chi) || for g = t^shift in T^m0.
double translation_property_residual(const LatticeField& f, const IVec& shift,
                                     const Character& chi);

/// CSV with header k_1..k_d2,re(u_1),im(u_1)..re(u_d),im(u_d), one row per
/// periodic character.
void write_spectrum_csv(const LatticeField& f, std::ostream& out);

}  // namespace korn
