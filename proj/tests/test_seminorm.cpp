#include "korn/seminorm.hpp"

#include "oracles.hpp"
#include "structures.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>

using namespace korn;
using namespace korn::testing;

namespace {

// rot-compensated translation displacement u(g) = rot(g)^T a; periodic for
// the structures whose rotation group is finite.
PeriodicDisplacement translation_mode(GroupSpecPtr spec, long period,
                                      const Vec& a) {
  PeriodicDisplacement u(spec, period);
  for (long site = 0; site < u.site_count(); ++site)
    u.values().col(site) =
        spec->rotation_of(u.element_of(site)).transpose() * a;
  return u;
}

std::vector<SeminormKind> all_kinds() {
  return {SeminormKind::PatchIso,  SeminormKind::PatchIso0,
          SeminormKind::PatchIso00, SeminormKind::GradRot,
          SeminormKind::GradRot0,  SeminormKind::GradRot00,
          SeminormKind::GradPlain};
}

}  // namespace

TEST_CASE("translation displacements lie in every kernel containing Trans") {
  struct Case {
    GroupSpecPtr spec;
    RangeSet range;
  };
  std::vector<Case> cases;
  {
    auto s = chain_spec();
    cases.push_back({s, power_range(*s, 0, 2)});
  }
  {
    auto s = zigzag_spec();
    cases.push_back({s, power_range(*s, 0, 3)});
  }
  {
    auto s = square_lattice_spec();
    cases.push_back({s, parse_range(*s, "id,t1,t2,t1^2,t1*t2,t2^2")});
  }
  UniformSampler rng(3);
  for (const auto& c : cases) {
    Vec a(c.spec->d());
    for (int i = 0; i < a.size(); ++i) a(i) = rng.symmetric();
    auto u = translation_mode(c.spec, 4 * c.spec->m0(), a);
    for (SeminormKind kind : all_kinds())
      CHECK(seminorm(u, c.range, kind) < 1e-12);
  }
}

TEST_CASE("alternating chain field under grad-plain") {
  auto spec = chain_spec();
  PeriodicDisplacement u(spec, 4);
  for (long s = 0; s < 4; ++s) u.values()(0, s) = (s % 2 == 0) ? 1.0 : -1.0;
  RangeSet r = power_range(*spec, 0, 1);  // {id, t}
  double value = seminorm(u, r, SeminormKind::GradPlain);
  CHECK(value * value == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("seminorm values match the least-squares oracle") {
  struct Case {
    GroupSpecPtr spec;
    RangeSet range;
  };
  std::vector<Case> cases;
  {
    auto s = chain_spec();
    cases.push_back({s, power_range(*s, 0, 2)});
  }
  {
    auto s = zigzag_spec();
    cases.push_back({s, power_range(*s, 0, 3)});
  }
  {
    auto s = helix_spec();
    cases.push_back({s, power_range(*s, 0, 4)});
  }
  {
    auto s = square_lattice_spec();
    cases.push_back({s, parse_range(*s, "id,t1,t2,t1*t2")});
  }
  int seed = 100;
  for (const auto& c : cases) {
    for (long period : {1 * c.spec->m0(), 4 * c.spec->m0()}) {
      auto u = PeriodicDisplacement::random(c.spec, period, ++seed);
      for (SeminormKind kind : all_kinds()) {
        double direct = seminorm(u, c.range, kind);
        double reference = oracle_seminorm(u, c.range, kind);
        CHECK(direct == doctest::Approx(reference).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("seminorm is independent of the representative set") {
  auto spec = zigzag_spec();
  RangeSet r = power_range(*spec, 0, 3);
  auto u = PeriodicDisplacement::random(spec, 8, 5);
  CanonicalElement shift = spec->pow(spec->generator_element(0), 3);
  for (SeminormKind kind :
       {SeminormKind::PatchIso, SeminormKind::GradRot,
        SeminormKind::GradPlain}) {
    double reference = seminorm(u, r, kind);
    CHECK(oracle_seminorm(u, r, kind, &shift) ==
          doctest::Approx(reference).epsilon(1e-10));
  }
}

TEST_CASE("quadratic form realizes the squared seminorm") {
  struct Case {
    GroupSpecPtr spec;
    RangeSet range;
  };
  std::vector<Case> cases;
  {
    auto s = chain_spec();
    cases.push_back({s, power_range(*s, 0, 2)});
  }
  {
    auto s = zigzag_spec();
    cases.push_back({s, power_range(*s, 0, 3)});
  }
  {
    auto s = helix_spec();
    cases.push_back({s, power_range(*s, 0, 4)});
  }
  int seed = 300;
  for (const auto& c : cases) {
    long period = 4 * c.spec->m0();
    for (SeminormKind kind : all_kinds()) {
      Mat q = quadratic_form(*c.spec, c.range, kind, period);
      CHECK((q - q.transpose()).norm() < 1e-12);
      Eigen::SelfAdjointEigenSolver<Mat> es(q);
      CHECK(es.eigenvalues().minCoeff() > -1e-10);
      for (int trial = 0; trial < 3; ++trial) {
        auto u = PeriodicDisplacement::random(c.spec, period, ++seed);
        Vec flat = u.flatten();
        double via_form = flat.dot(q * flat);
        double direct = seminorm(u, c.range, kind);
        CHECK(via_form ==
              doctest::Approx(direct * direct).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("empty skew pattern collapses grad-rot00 to grad-plain") {
  auto spec = chain_spec();
  RangeSet r = power_range(*spec, 0, 2);
  Mat q1 = quadratic_form(*spec, r, SeminormKind::GradRot00, 6);
  Mat q2 = quadratic_form(*spec, r, SeminormKind::GradPlain, 6);
  CHECK((q1 - q2).norm() < 1e-14);
}

TEST_CASE("nonzero spectrum embeds into the double-period lift") {
  // Comparison after removing the 1/|C_N| averaging: the unnormalized sum
  // form at 2N contains every nonzero eigenvalue of the form at N (the
  // lifted eigenvectors stay eigenvectors of the block-circulant lift).
  auto spec = chain_spec();
  RangeSet r = power_range(*spec, 0, 2);
  Mat q4 = 4.0 * quadratic_form(*spec, r, SeminormKind::PatchIso, 4);
  Mat q8 = 8.0 * quadratic_form(*spec, r, SeminormKind::PatchIso, 8);
  Eigen::SelfAdjointEigenSolver<Mat> e4(q4), e8(q8);
  for (int i = 0; i < e4.eigenvalues().size(); ++i) {
    double lambda = e4.eigenvalues()(i);
    if (lambda < 1e-12) continue;
    double best = 1e300;
    for (int j = 0; j < e8.eigenvalues().size(); ++j)
      best = std::min(best, std::abs(e8.eigenvalues()(j) - lambda));
    CHECK(best < 1e-8);
  }
}

TEST_CASE("size guard") {
  auto spec = chain_spec();
  RangeSet r = power_range(*spec, 0, 2);
  CHECK_THROWS_AS(quadratic_form(*spec, r, SeminormKind::PatchIso, 20000),
                  numeric_error);
}

TEST_CASE("kernel dimensions") {
  auto spec = chain_spec();
  RangeSet p2 = power_range(*spec, 0, 2);
  RangeSet p1 = power_range(*spec, 0, 1);

  SUBCASE("property-2 range gives the closed-form dimension 2") {
    for (long period : {2L, 4L, 8L})
      CHECK(kernel(*spec, p2, SeminormKind::PatchIso, period).dimension == 2);
  }

  SUBCASE("short range blows the kernel up to N + 1") {
    for (long period : {2L, 4L, 8L})
      CHECK(kernel(*spec, p1, SeminormKind::PatchIso, period).dimension ==
            period + 1);
  }

  SUBCASE("zigzag grad-plain kernel is the periodic translations") {
    auto zig = zigzag_spec();
    CHECK(kernel(*zig, power_range(*zig, 0, 3), SeminormKind::GradPlain, 8)
              .dimension == 2);
  }

  SUBCASE("kernel fields evaluate to zero seminorm") {
    for (auto fields = kernel_fields(spec, p2, SeminormKind::PatchIso, 6);
         const auto& field : fields)
      CHECK(seminorm(field, p2, SeminormKind::PatchIso) < 1e-8);
    auto zig = zigzag_spec();
    for (auto fields =
             kernel_fields(zig, power_range(*zig, 0, 3),
                           SeminormKind::PatchIso, 8);
         const auto& field : fields)
      CHECK(seminorm(field, power_range(*zig, 0, 3),
                     SeminormKind::PatchIso) < 1e-8);
  }
}

TEST_CASE("seminorm ordering chain") {
  // patch-iso <= patch-iso0 <= patch-iso00 <= grad-plain
  int seed = 900;
  for (auto spec : {chain_spec(), zigzag_spec(), helix_spec(),
                    square_lattice_spec()}) {
    RangeSet r = spec->d2() == 2
                     ? parse_range(*spec, "id,t1,t2,t1^2,t1*t2,t2^2")
                     : power_range(*spec, 0, 3);
    for (int trial = 0; trial < 10; ++trial) {
      auto u = PeriodicDisplacement::random(spec, 4 * spec->m0(), ++seed);
      double v_iso = seminorm(u, r, SeminormKind::PatchIso);
      double v_iso0 = seminorm(u, r, SeminormKind::PatchIso0);
      double v_iso00 = seminorm(u, r, SeminormKind::PatchIso00);
      double v_grad = seminorm(u, r, SeminormKind::GradPlain);
      CHECK(v_iso <= v_iso0 + 1e-12);
      CHECK(v_iso0 <= v_iso00 + 1e-12);
      CHECK(v_iso00 <= v_grad + 1e-12);
    }
  }
}

TEST_CASE("grad seminorm sandwich against the patch seminorm") {
  // ||u||_R <= |||nabla|||_R <= sqrt(2 |R \ {id}|) ||u||_R
  int seed = 1300;
  for (auto spec : {chain_spec(), zigzag_spec(), helix_spec(),
                    square_lattice_spec()}) {
    RangeSet r = spec->d2() == 2
                     ? parse_range(*spec, "id,t1,t2,t1^2,t1*t2,t2^2")
                     : power_range(*spec, 0, 3);
    double factor = std::sqrt(2.0 * (r.size() - 1));
    for (int trial = 0; trial < 25; ++trial) {
      auto u = PeriodicDisplacement::random(spec, 8 * spec->m0(), ++seed);
      double patch = seminorm(u, r, SeminormKind::PatchIso);
      double grad = seminorm(u, r, SeminormKind::GradRot);
      CHECK(patch <= grad + 1e-9);
      CHECK(grad <= factor * patch + 1e-9);
    }
  }
}

TEST_CASE("helix kernels coincide across the seminorm family") {
  // All patch kinds share the kernel at a fixed period; for the helix it is
  // spanned by the axial translation and the constant field combining the
  // in-plane rotation generator with its compensating translation.
  auto spec = helix_spec();
  RangeSet r = power_range(*spec, 0, 4);
  for (long period : {4L, 8L}) {
    CHECK(kernel(*spec, r, SeminormKind::PatchIso, period).dimension == 2);
    CHECK(kernel(*spec, r, SeminormKind::PatchIso0, period).dimension == 2);
    CHECK(kernel(*spec, r, SeminormKind::PatchIso00, period).dimension == 2);
    CHECK(kernel(*spec, r, SeminormKind::GradPlain, period).dimension == 1);
  }
  // and the constant field u = (0, s, a3) really is a zero mode
  PeriodicDisplacement u(spec, 8);
  for (long s = 0; s < u.site_count(); ++s) {
    u.values()(1, s) = 0.7;
    u.values()(2, s) = -0.2;
  }
  CHECK(seminorm(u, r, SeminormKind::PatchIso) < 1e-12);
  CHECK(seminorm(u, r, SeminormKind::PatchIso00) < 1e-12);
}

TEST_CASE("identity removal leaves grad kinds unchanged") {
  auto spec = zigzag_spec();
  RangeSet with_id = power_range(*spec, 0, 3);
  RangeSet without_id = power_range(*spec, 1, 3);
  auto u = PeriodicDisplacement::random(spec, 8, 77);
  for (SeminormKind kind : {SeminormKind::GradRot, SeminormKind::GradRot0,
                            SeminormKind::GradRot00, SeminormKind::GradPlain})
    CHECK(seminorm(u, with_id, kind) ==
          doctest::Approx(seminorm(u, without_id, kind)).epsilon(1e-12));
}

TEST_CASE("glide group seminorms agree with the oracle") {
  auto spec = glide_spec();
  // R' R'' with R' = generators + identity and R'' = {id, t1, t2}
  std::vector<CanonicalElement> rprime{spec->identity_element(),
                                       spec->generator_element(0),
                                       spec->generator_element(1),
                                       spec->generator_element(2)};
  std::vector<CanonicalElement> rsecond{spec->identity_element(),
                                        spec->generator_element(0),
                                        spec->generator_element(1)};
  std::vector<CanonicalElement> elements;
  for (const auto& a : rprime)
    for (const auto& b : rsecond) {
      CanonicalElement e = spec->multiply(a, b);
      bool dup = false;
      for (const auto& seen : elements) dup = dup || seen == e;
      if (!dup) elements.push_back(e);
    }
  RangeSet r = make_range(std::move(elements));
  REQUIRE(has_property_2(*spec, r));

  int seed = 4000;
  for (SeminormKind kind : {SeminormKind::PatchIso, SeminormKind::GradRot,
                            SeminormKind::GradPlain}) {
    auto u = PeriodicDisplacement::random(spec, 3, ++seed);
    CHECK(seminorm(u, r, kind) ==
          doctest::Approx(oracle_seminorm(u, r, kind)).epsilon(1e-10));
  }

  // space group: the patch-iso kernel is exactly the translations
  CHECK(kernel(*spec, r, SeminormKind::PatchIso, 2).dimension == 2);
  CHECK(kernel(*spec, r, SeminormKind::GradPlain, 2).dimension == 2);
}

TEST_CASE("space-group forms share kernels and bounded quotients") {
  auto spec = square_lattice_spec();
  RangeSet r = parse_range(*spec, "id,t1,t2,t1^2,t1*t2,t2^2");
  for (long period : {2L, 4L}) {
    auto k_iso = kernel(*spec, r, SeminormKind::PatchIso, period);
    auto k_iso00 = kernel(*spec, r, SeminormKind::PatchIso00, period);
    auto k_grad = kernel(*spec, r, SeminormKind::GradPlain, period);
    CHECK(k_iso.dimension == 2);
    CHECK(k_iso00.dimension == 2);
    CHECK(k_grad.dimension == 2);
  }
}
