#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "eigenmin/eigenfamily.hpp"
#include "eigenmin/generators.hpp"
#include "eigenmin/rng.hpp"
#include "eigenmin/verification.hpp"

using namespace eigenmin;

namespace {

const Complex kI(0.0, 1.0);

CVec unit_vec(int len, int k) {
  CVec v(len, Complex(0.0));
  v[k - 1] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("expected eigenvalues match the closed forms") {
  {
    const EigenFamily f = make_family(SpaceId::SUSO, 3, unit_vec(3, 1));
    CHECK(f.lambda == doctest::Approx(-20.0 / 3.0).epsilon(1e-15));
    CHECK(f.mu == doctest::Approx(-8.0 / 3.0).epsilon(1e-15));
  }
  {
    const EigenFamily f = make_family(SpaceId::SUSP, 2, unit_vec(4, 1), unit_vec(4, 2));
    CHECK(f.lambda == doctest::Approx(-5.0).epsilon(1e-15));
    CHECK(f.mu == doctest::Approx(-1.0).epsilon(1e-15));
  }
  {
    const EigenFamily f = make_family(SpaceId::SPU, 1, CVec{1.0, Complex(0.0, 2.0)});
    CHECK(f.lambda == doctest::Approx(-4.0).epsilon(1e-15));
    CHECK(f.mu == doctest::Approx(-2.0).epsilon(1e-15));
  }
  // lambda != mu everywhere in the working grid.
  for (const auto& [id, n] : acceptance_grid()) {
    const auto [lambda, mu] = expected_eigenvalues(id, n);
    CHECK(std::abs(lambda - mu) > 0.5);
  }
}

TEST_CASE("parameter validation names the violated relation") {
  CHECK_THROWS_AS(make_family(SpaceId::SUSO, 2, CVec{0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_family(SpaceId::SUSO, 2, unit_vec(2, 1), unit_vec(2, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_family(SpaceId::SUSO, 1, unit_vec(1, 1)), std::invalid_argument);

  // SOU strict mode: isotropic a, real b, orthogonal pair.
  CVec a{Complex(1.0, 0.0), Complex(0.0, 1.0), 0.0, 0.0};
  CHECK_NOTHROW(make_family(SpaceId::SOU, 2, a, unit_vec(4, 3)));
  try {
    make_family(SpaceId::SOU, 2, CVec{1.0, 1.0, 0.0, 0.0}, unit_vec(4, 3));
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("(a,a)") != std::string::npos);
  }
  try {
    make_family(SpaceId::SOU, 2, a, CVec{0.0, 0.0, Complex(0.0, 1.0), 0.0});
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("real b") != std::string::npos);
  }

  // Quadric mode accepts a complex b as long as (a,a)(b,b) = (a,b)^2.
  CHECK_NOTHROW(make_family(SpaceId::SOU, 2, a, CVec{0.0, 0.0, Complex(0.0, 1.0), 0.0},
                            SOUMode::quadric));

  // SUSP rejects dependent parameters.
  CVec twice = a;
  for (auto& v : twice) v *= 2.0;
  CHECK_THROWS_AS(make_family(SpaceId::SUSP, 2, a, twice), std::invalid_argument);
}

TEST_CASE("lift values at the identity") {
  const EigenFamily isotropic = make_family(SpaceId::SUSO, 2, CVec{1.0, kI});
  CHECK(std::abs(evaluate(isotropic, CMat::identity(2))) == 0.0);

  const EigenFamily unit = make_family(SpaceId::SUSO, 2, unit_vec(2, 1));
  CHECK(evaluate(unit, CMat::identity(2)) == Complex(1.0));

  CHECK_THROWS_AS(evaluate(unit, 2.0 * CMat::identity(2)), std::invalid_argument);
}

TEST_CASE("SOU lift equals its frame expansion") {
  const FamilyParams params = sample_parameters(SpaceId::SOU, 3, 77);
  const EigenFamily fam = make_family(SpaceId::SOU, 3, params.a, params.b);
  const int n = 3;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const CMat x = random_element(GroupSpec::SO(2 * n), s);
    // columns of x as complex-paired coefficients
    CVec ax(2 * n), bx(2 * n);
    for (int k = 0; k < 2 * n; ++k) {
      Complex sa = 0.0, sb = 0.0;
      for (int i = 0; i < 2 * n; ++i) {
        sa += params.a[i] * x(i, k);
        sb += params.b[i] * x(i, k);
      }
      ax[k] = sa;
      bx[k] = sb;
    }
    Complex expansion = 0.0;
    for (int t = 0; t < n; ++t) {
      expansion += ax[n + t] * bx[t] - ax[t] * bx[n + t];
    }
    expansion *= 2.0 / std::sqrt(2.0);
    CHECK(std::abs(evaluate(fam, x) - expansion) <= 1e-10);
  }
}

TEST_CASE("exact derivatives: hand values and FD cross-check") {
  const EigenFamily fam = make_family(SpaceId::SUSO, 2, unit_vec(2, 1));
  const ScalarField f = lift_field(fam);
  const CMat I2 = CMat::identity(2);
  CHECK(std::abs(f.exact_d2(I2, kI * gen_X(2, 1, 2)) - Complex(-2.0)) <= 1e-14);
  CHECK(std::abs(f.exact_d1(I2, CMat(2, 2))) == 0.0);

  for (const auto& [id, n] : {std::pair{SpaceId::SPU, 2}, std::pair{SpaceId::SUSP, 2}}) {
    const SymmetricSpaceModel m = symmetric_space(id, n);
    CHECK(backend_agreement(m, 50, 123) <= 1e-5);
  }
}

TEST_CASE("sample_parameters: constraints, independence, determinism") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const FamilyParams p = sample_parameters(SpaceId::SOU, 3, s);
    CHECK(std::abs(bilinear_pair(p.a, p.a)) <= 1e-14);
    CHECK(std::abs(bilinear_pair(p.a, p.b)) <= 1e-14);
    for (const Complex& v : p.b) CHECK(v.imag() == 0.0);
  }
  const FamilyParams q1 = sample_parameters(SpaceId::SUSP, 2, 9);
  const FamilyParams q2 = sample_parameters(SpaceId::SUSP, 2, 9);
  CHECK(q1.a == q2.a);
  CHECK(q1.b == q2.b);
  CHECK_NOTHROW(make_family(SpaceId::SUSP, 2, q1.a, q1.b));  // independence holds

  const FamilyParams r = normalized(sample_parameters(SpaceId::SUSO, 4, 10));
  CHECK(hnorm(r.a) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigen identities at random points, all four spaces") {
  for (const auto& [id, n] : {std::pair{SpaceId::SUSO, 2}, std::pair{SpaceId::SPU, 1},
                              std::pair{SpaceId::SOU, 2}, std::pair{SpaceId::SUSP, 2}}) {
    const SymmetricSpaceModel m = symmetric_space(id, n);
    const EigenCertification cert = certify_eigen(m, 2, 10, 33, Backend::exact);
    CHECK(cert.max_tau_residual <= 1e-8);
    CHECK(cert.max_kappa_residual <= 1e-8);
    CHECK(cert.invariance_residual <= 1e-10);
    CHECK(cert.vertical_residual <= 1e-9);
    CHECK(cert.pair_scaled_residual <= 1e-8);
  }
}

TEST_CASE("K-invariance of the lifts") {
  for (const auto& [id, n] : {std::pair{SpaceId::SUSO, 3}, std::pair{SpaceId::SPU, 2},
                              std::pair{SpaceId::SOU, 2}, std::pair{SpaceId::SUSP, 2}}) {
    const SymmetricSpaceModel m = symmetric_space(id, n);
    const FamilyParams params = normalized(sample_parameters(id, n, 60));
    const EigenFamily fam = make_family(id, n, params.a, params.b);
    for (std::uint64_t s = 0; s < 25; ++s) {
      const CMat p = random_element(m.G, 2 * s);
      const CMat k = random_embedded_K(m, 2 * s + 1);
      CHECK(std::abs(evaluate(fam, p * k) - evaluate(fam, p)) <= 1e-10);
    }
  }
}

TEST_CASE("cross-parameter pairing fails: the frozen counterexample") {
  // kappa(phi_e1, phi_e2)(I) = 2 on SU(2)/SO(2) while mu phi phi' = -2. The
  // pairing identity holds for scaled parameters only.
  const SymmetricSpaceModel m = symmetric_space(SpaceId::SUSO, 2);
  const EigenFamily f1 = make_family(SpaceId::SUSO, 2, unit_vec(2, 1));
  const EigenFamily f2 = make_family(SpaceId::SUSO, 2, unit_vec(2, 2));
  const CMat I2 = CMat::identity(2);
  const Complex kap = conformality(lift_field(f1), lift_field(f2), I2, m.p_basis);
  CHECK(std::abs(kap - Complex(2.0)) <= 1e-12);
  const Complex rhs = f1.mu * evaluate(f1, I2) * evaluate(f2, I2);
  CHECK(std::abs(rhs - Complex(-2.0)) <= 1e-12);

  // Scaled pair: exact identity.
  CVec ca{Complex(0.6, 0.8), 0.0};
  const EigenFamily f3 = make_family(SpaceId::SUSO, 2, ca);
  const CMat p = random_element(m.G, 5);
  const Complex kap_scaled = conformality(lift_field(f1), lift_field(f3), p, m.p_basis);
  const Complex rhs_scaled = f1.mu * evaluate(f1, p) * evaluate(f3, p);
  CHECK(std::abs(kap_scaled - rhs_scaled) <= 1e-12);
}

TEST_CASE("family parameters load from JSON") {
  const std::string path = "/tmp/eigenmin_params_test.json";
  {
    std::ofstream out(path, std::ios::trunc);
    out << R"({"space": "suso", "n": 2, "a_re": [1.0, 0.0], "a_im": [0.0, 1.0]})";
  }
  const EigenFamily fam = family_from_json_file(path);
  CHECK(fam.space == SpaceId::SUSO);
  CHECK(fam.n == 2);
  CHECK(std::abs(evaluate(fam, CMat::identity(2))) == 0.0);  // a = (1, i) is isotropic
  std::remove(path.c_str());

  CHECK_THROWS_AS(family_from_json_file("/tmp/eigenmin_missing.json"), std::invalid_argument);
}
