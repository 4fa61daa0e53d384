#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eigenmin/eigenfamily.hpp"
#include "eigenmin/generators.hpp"
#include "eigenmin/rng.hpp"
#include "eigenmin/verification.hpp"

using namespace eigenmin;

namespace {

const Complex kI(0.0, 1.0);
const double kSqrt2 = std::sqrt(2.0);

/// Matrix coordinate x_{j,a} as a field with exact curve derivatives
/// (p exp(sZ))_{j,a}.
ScalarField coordinate_field(int j, int a) {
  ScalarField f;
  f.evaluate = [j, a](const CMat& p) { return p(j - 1, a - 1); };
  f.exact_d1 = [j, a](const CMat& p, const CMat& Z) { return (p * Z)(j - 1, a - 1); };
  f.exact_d2 = [j, a](const CMat& p, const CMat& Z) { return (p * Z * Z)(j - 1, a - 1); };
  return f;
}

ScalarField constant_field(Complex c) {
  ScalarField f;
  f.evaluate = [c](const CMat&) { return c; };
  f.exact_d1 = [](const CMat&, const CMat&) { return Complex(0.0); };
  f.exact_d2 = [](const CMat&, const CMat&) { return Complex(0.0); };
  return f;
}

}  // namespace

TEST_CASE("coordinate derivative on SO(3) along Y_12") {
  const ScalarField f = coordinate_field(1, 2);
  const CMat I3 = CMat::identity(3);
  const CMat y12 = gen_Y(3, 1, 2);
  // (x_11 d_{a,s} - x_12 d_{a,r})/sqrt(2) at the identity.
  const Complex fd = directional_derivative(f, I3, y12, 1, Backend::fd);
  CHECK(std::abs(fd - Complex(1.0 / kSqrt2)) <= 1e-9);
  const Complex ex = directional_derivative(f, I3, y12, 1, Backend::exact);
  CHECK(std::abs(ex - Complex(1.0 / kSqrt2)) <= 1e-15);
}

TEST_CASE("constant fields have vanishing derivatives") {
  const ScalarField f = constant_field(Complex(2.5, -1.0));
  const CMat I3 = CMat::identity(3);
  const CMat z = gen_Y(3, 1, 3);
  CHECK(std::abs(directional_derivative(f, I3, z, 2, Backend::fd)) == 0.0);
  const AlgebraBasis so3 = algebra_basis(GroupSpec::SO(3));
  CHECK(std::abs(tension(f, I3, so3, Backend::fd)) == 0.0);
  CHECK(std::abs(conformality(f, f, I3, so3, Backend::fd)) == 0.0);
  for (const Complex& c : gradient_coeffs(f, I3, so3, Backend::fd)) CHECK(std::abs(c) == 0.0);
}

TEST_CASE("backend guard") {
  ScalarField f;
  f.evaluate = [](const CMat& p) { return p.trace(); };
  CHECK_THROWS_AS(directional_derivative(f, CMat::identity(2), gen_Y(2, 1, 2), 1, Backend::exact),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      directional_derivative(f, CMat::identity(2), gen_Y(2, 1, 2), 3, Backend::fd),
      std::invalid_argument);
}

TEST_CASE("second derivative of the SU(2)/SO(2) lift at the identity") {
  const EigenFamily fam = make_family(SpaceId::SUSO, 2, CVec{1.0, 0.0});
  const ScalarField f = lift_field(fam);
  const CMat I2 = CMat::identity(2);
  const CMat z = kI * gen_X(2, 1, 2);
  CHECK(std::abs(directional_derivative(f, I2, z, 2, Backend::exact) - Complex(-2.0)) <= 1e-14);
  CHECK(std::abs(hessian_quadratic(f, I2, z) - Complex(-2.0)) <= 1e-14);

  const SymmetricSpaceModel m = symmetric_space(SpaceId::SUSO, 2);
  CHECK(std::abs(tension(f, I2, m.p_basis) - Complex(-4.0)) <= 1e-14);
  CHECK(std::abs(conformality(f, f, I2, m.p_basis) - Complex(-2.0)) <= 1e-14);
}

TEST_CASE("hessian is quadratic and sums to the tension") {
  const EigenFamily fam = make_family(SpaceId::SUSO, 3, CVec{0.4, Complex(0.2, 0.6), -0.3});
  const ScalarField f = lift_field(fam);
  const SymmetricSpaceModel m = symmetric_space(SpaceId::SUSO, 3);
  const CMat p = random_element(m.G, 21);

  Rng rng(3);
  CMat x(3, 3);
  const AlgebraBasis g_basis = algebra_basis(m.G);
  for (const CMat& b : g_basis.elements) x += rng.gaussian() * b;
  const Complex h1 = hessian_quadratic(f, p, x);
  const Complex h2 = hessian_quadratic(f, p, 2.0 * x);
  CHECK(std::abs(h2 - 4.0 * h1) <= 1e-9 * (1.0 + std::abs(h2)));

  Complex sum = 0.0;
  for (const CMat& b : g_basis.elements) sum += hessian_quadratic(f, p, b);
  const Complex tau = tension(f, p, g_basis);
  CHECK(std::abs(sum - tau) <= 1e-9 * (1.0 + std::abs(tau)));
}

TEST_CASE("gradient coefficients: vertical components vanish, norm matches kappa") {
  const std::pair<SpaceId, int> cells[] = {{SpaceId::SUSO, 3}, {SpaceId::SPU, 2},
                                           {SpaceId::SOU, 2},  {SpaceId::SUSP, 2}};
  for (const auto& [id, n] : cells) {
    const SymmetricSpaceModel m = symmetric_space(id, n);
    const FamilyParams params = normalized(sample_parameters(id, n, 40));
    const EigenFamily fam = make_family(id, n, params.a, params.b);
    const ScalarField f = lift_field(fam);
    const CMat p = random_element(m.G, 41);

    for (const Complex& c : gradient_coeffs(f, p, m.k_basis)) CHECK(std::abs(c) <= 1e-9);

    const CVec grad = gradient_coeffs(f, p, m.p_basis);
    Complex sum_sq = 0.0;
    for (const Complex& c : grad) sum_sq += c * c;
    const Complex kap = conformality(f, f, p, m.p_basis);
    CHECK(std::abs(sum_sq - kap) <= 1e-9 * (1.0 + std::abs(kap)));
  }
}

TEST_CASE("vertical annihilation makes full-basis and p-basis tension agree") {
  const SymmetricSpaceModel m = symmetric_space(SpaceId::SPU, 2);
  const FamilyParams params = normalized(sample_parameters(SpaceId::SPU, 2, 50));
  const EigenFamily fam = make_family(SpaceId::SPU, 2, params.a);
  const ScalarField f = lift_field(fam);
  const CMat p = random_element(m.G, 51);

  for (const CMat& k : m.k_basis.elements) {
    CHECK(std::abs(directional_derivative(f, p, k, 1, Backend::exact)) <= 1e-9);
    CHECK(std::abs(directional_derivative(f, p, k, 2, Backend::exact)) <= 1e-9);
  }
  const Complex tau_full = tension(f, p, algebra_basis(m.G));
  const Complex tau_p = tension(f, p, m.p_basis);
  CHECK(std::abs(tau_full - tau_p) <= 1e-9 * (1.0 + std::abs(tau_p)));
}

TEST_CASE("FD and exact backends agree on random triples") {
  for (const auto& [id, n] :
       {std::pair{SpaceId::SUSO, 3}, std::pair{SpaceId::SOU, 2}, std::pair{SpaceId::SUSP, 2}}) {
    const SymmetricSpaceModel m = symmetric_space(id, n);
    CHECK(backend_agreement(m, 40, 60) <= 1e-5);
  }
}

TEST_CASE("tau and kappa are basis independent") {
  for (const auto& [id, n] : {std::pair{SpaceId::SUSO, 3}, std::pair{SpaceId::SPU, 2}}) {
    const StructureSuite s = structure_suite(symmetric_space(id, n), 99);
    CHECK(s.basis_independence_residual <= 1e-9);
    CHECK(s.max_gram_residual <= 1e-12);
    CHECK(s.p_dims_ok);
  }
}
