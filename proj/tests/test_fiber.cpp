#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eigenmin/fiber.hpp"
#include "eigenmin/rng.hpp"

using namespace eigenmin;

namespace {

const Complex kI(0.0, 1.0);

EigenFamily unit_family(SpaceId id, int n, std::uint64_t seed) {
  const FamilyParams p = normalized(sample_parameters(id, n, seed));
  return make_family(id, n, p.a, p.b);
}

}  // namespace

TEST_CASE("isotropic parameters put the identity on the fiber") {
  const EigenFamily fam = make_family(SpaceId::SUSO, 2, CVec{1.0, kI});
  CHECK(std::abs(evaluate(fam, CMat::identity(2))) == 0.0);
  const SymmetricSpaceModel m = symmetric_space(SpaceId::SUSO, 2);
  const ZeroSearch zs = find_zero(fam, m, 1);
  REQUIRE(zs.converged);
  CHECK(zs.point.value_residual <= 1e-10);
}

TEST_CASE("find_zero lands away from the identity when phi(I) = 1") {
  const EigenFamily fam = make_family(SpaceId::SUSO, 2, CVec{1.0, 0.0});
  const SymmetricSpaceModel m = symmetric_space(SpaceId::SUSO, 2);
  const ZeroSearch zs = find_zero(fam, m, 4);
  REQUIRE(zs.converged);
  CHECK(zs.point.value_residual <= 1e-10);
  CHECK(std::abs(evaluate(fam, CMat::identity(2))) == 1.0);
  CHECK((zs.point.p - CMat::identity(2)).norm_fro() > 0.1);
}

TEST_CASE("find_zero succeeds across the four spaces") {
  for (const auto& [id, n] : {std::pair{SpaceId::SUSO, 3}, std::pair{SpaceId::SPU, 2},
                              std::pair{SpaceId::SOU, 2}, std::pair{SpaceId::SUSP, 2}}) {
    const SymmetricSpaceModel m = symmetric_space(id, n);
    const EigenFamily fam = unit_family(id, n, 7);
    for (std::uint64_t s = 0; s < 3; ++s) {
      const ZeroSearch zs = find_zero(fam, m, s);
      REQUIRE(zs.converged);
      CHECK(zs.point.value_residual <= 1e-10);
      CHECK(membership_residual(m.G, zs.point.p) <= 1e-8);
      CHECK(zs.point.gradient_margin > 0.0);
    }
  }
}

TEST_CASE("project_to_fiber: determinism, idempotence, iteration budget") {
  const SymmetricSpaceModel m = symmetric_space(SpaceId::SUSO, 3);
  const EigenFamily fam = unit_family(SpaceId::SUSO, 3, 11);

  const CMat p0 = random_element(m.G, 100);
  const FiberPoint fp1 = project_to_fiber(fam, m, p0);
  const FiberPoint fp2 = project_to_fiber(fam, m, p0);
  CHECK(fp1.p.data() == fp2.p.data());  // bitwise determinism

  int iters = 0;
  const FiberPoint again = project_to_fiber(fam, m, fp1.p, {}, &iters);
  CHECK(iters == 0);
  CHECK((again.p - fp1.p).norm_fro() <= 1e-6);

  for (std::uint64_t s = 0; s < 10; ++s) {
    int it = 0;
    const FiberPoint fp = project_to_fiber(fam, m, random_element(m.G, 200 + s), {}, &it);
    CHECK(it <= 20);
    CHECK(fp.value_residual <= 1e-10);
    CHECK(membership_residual(m.G, fp.p) <= 1e-8);
  }

  CHECK_THROWS_AS(project_to_fiber(fam, m, 2.0 * CMat::identity(3)), std::invalid_argument);
}

TEST_CASE("fiber is closed under the right K-action") {
  const SymmetricSpaceModel m = symmetric_space(SpaceId::SOU, 3);
  const EigenFamily fam = unit_family(SpaceId::SOU, 3, 13);
  const FiberPoint fp = project_to_fiber(fam, m, random_element(m.G, 14));
  for (std::uint64_t s = 0; s < 5; ++s) {
    const CMat k = random_embedded_K(m, s);
    CHECK(std::abs(evaluate(fam, fp.p * k)) <= fp.value_residual + 1e-10);
  }
}

TEST_CASE("regularity margin is positive and K-invariant") {
  const SymmetricSpaceModel m = symmetric_space(SpaceId::SUSP, 2);
  const EigenFamily fam = unit_family(SpaceId::SUSP, 2, 15);
  std::vector<FiberPoint> points;
  for (std::uint64_t s = 0; s < 10; ++s) {
    points.push_back(project_to_fiber(fam, m, random_element(m.G, 300 + s)));
  }
  const double margin = regularity_margin(fam, m, points);
  CHECK(margin > 1e-3);

  const CMat k = random_embedded_K(m, 77);
  for (int i = 0; i < 3; ++i) {
    const double m1 = horizontal_margin(fam, m, points[i].p);
    const double m2 = horizontal_margin(fam, m, points[i].p * k);
    CHECK(std::abs(m1 - m2) <= 1e-9 * (1.0 + m1));
  }

  CHECK_THROWS_AS(regularity_margin(fam, m, {}), std::invalid_argument);
}

TEST_CASE("critical point scan: positivity and parameter homogeneity") {
  const SymmetricSpaceModel m = symmetric_space(SpaceId::SUSO, 2);
  const EigenFamily fam = make_family(SpaceId::SUSO, 2, CVec{1.0, 0.0});
  const double margin = critical_point_scan(fam, m, 200, 17);
  CHECK(margin > 1e-6);

  // phi is quadratic in a, so margins scale by |c|^2.
  const Complex c(1.3, -0.4);
  CVec ca{c, 0.0};
  const EigenFamily scaled = make_family(SpaceId::SUSO, 2, ca);
  const double margin_scaled = critical_point_scan(scaled, m, 200, 17);
  CHECK(std::abs(margin_scaled - std::norm(c) * margin) <= 1e-9 * (1.0 + margin_scaled));

  const SymmetricSpaceModel mspu = symmetric_space(SpaceId::SPU, 1);
  const EigenFamily fspu = unit_family(SpaceId::SPU, 1, 18);
  CHECK(critical_point_scan(fspu, mspu, 200, 19) > 1e-6);
}

TEST_CASE("mean curvature vanishes on the fiber and not on control levels") {
  const SymmetricSpaceModel m = symmetric_space(SpaceId::SUSO, 3);
  const EigenFamily fam = unit_family(SpaceId::SUSO, 3, 21);
  const FiberPoint fp = project_to_fiber(fam, m, random_element(m.G, 400));
  const MinimalityReport rep = mean_curvature_estimate(fam, m, fp, 23);

  CHECK(rep.tangent_dim == m.G.algebra_dim() - 2);
  CHECK(rep.H_norm <= 1e-4);
  CHECK(rep.control_H_norm > 10.0 * std::max(rep.H_norm, 1e-5));
  CHECK(std::abs(rep.H_components[0]) <= rep.H_norm + 1e-15);

  // Trace consistency: summing second derivatives over any full orthonormal
  // frame gives the tension, which is lambda phi = 0 on the fiber.
  const ScalarField f = lift_field(fam);
  const Complex tau = tension(f, fp.p, algebra_basis(m.G));
  CHECK(std::abs(tau.real()) <= 1e-8);

  // Off-fiber points are rejected.
  FiberPoint off;
  off.p = random_element(m.G, 500);
  off.value_residual = std::abs(evaluate(fam, off.p));
  off.gradient_margin = 1.0;
  CHECK_THROWS_AS(mean_curvature_estimate(fam, m, off, 1), std::invalid_argument);
}

TEST_CASE("degenerate cells: every level set is a K-coset, H identically zero") {
  // dim K = dim G - 2 for these spaces, so level sets coincide with translated
  // subgroups and even the control curvature is an exact zero.
  for (const auto& [id, n] : {std::pair{SpaceId::SUSO, 2}, std::pair{SpaceId::SPU, 1},
                              std::pair{SpaceId::SOU, 2}}) {
    const SymmetricSpaceModel m = symmetric_space(id, n);
    CHECK(m.k_basis.size() == m.G.algebra_dim() - 2);
    const EigenFamily fam = unit_family(id, n, 31);
    const FiberPoint fp = project_to_fiber(fam, m, random_element(m.G, 32));
    const MinimalityReport rep = mean_curvature_estimate(fam, m, fp, 33);
    CHECK(rep.H_norm <= 1e-12);
    CHECK(rep.control_H_norm <= 1e-12);
  }
}
