#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eigenmin/rng.hpp"
#include "eigenmin/spaces.hpp"

using namespace eigenmin;

TEST_CASE("p dimensions match the closed forms") {
  CHECK(symmetric_space(SpaceId::SUSO, 3).p_basis.size() == 5);
  CHECK(symmetric_space(SpaceId::SUSP, 3).p_basis.size() == 14);
  CHECK(symmetric_space(SpaceId::SOU, 2).p_basis.size() == 2);

  for (int n = 2; n <= 4; ++n) {
    CHECK(symmetric_space(SpaceId::SUSO, n).p_basis.size() == (n - 1) * (n + 2) / 2);
    CHECK(symmetric_space(SpaceId::SOU, n).p_basis.size() == n * (n - 1));
  }
  for (int n = 1; n <= 3; ++n) CHECK(symmetric_space(SpaceId::SPU, n).p_basis.size() == n * (n + 1));
  for (int n = 2; n <= 3; ++n)
    CHECK(symmetric_space(SpaceId::SUSP, n).p_basis.size() == (n - 1) * (2 * n + 1));
}

TEST_CASE("p + k fills the algebra and the pieces are orthogonal") {
  const std::pair<SpaceId, int> cells[] = {{SpaceId::SUSO, 3}, {SpaceId::SPU, 2},
                                           {SpaceId::SOU, 3},  {SpaceId::SUSP, 2}};
  for (const auto& [id, n] : cells) {
    const SymmetricSpaceModel m = symmetric_space(id, n);
    CHECK(m.p_basis.size() + m.k_basis.size() == m.G.algebra_dim());
    CHECK(m.p_basis.gram_residual() <= 1e-12);
    CHECK(m.k_basis.gram_residual() <= 1e-12);
    double worst = 0.0;
    for (const CMat& p : m.p_basis.elements)
      for (const CMat& k : m.k_basis.elements) worst = std::max(worst, std::abs(inner(p, k)));
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("Cartan relations: [k,p] in p and [p,p] in k") {
  const std::pair<SpaceId, int> cells[] = {{SpaceId::SUSO, 3}, {SpaceId::SPU, 2},
                                           {SpaceId::SOU, 2},  {SpaceId::SUSP, 2}};
  Rng rng(17);
  for (const auto& [id, n] : cells) {
    const SymmetricSpaceModel m = symmetric_space(id, n);
    for (int t = 0; t < 10; ++t) {
      const CMat& k = m.k_basis[static_cast<int>(rng.next_u64() % m.k_basis.size())];
      const CMat& p = m.p_basis[static_cast<int>(rng.next_u64() % m.p_basis.size())];
      const CMat& p2 = m.p_basis[static_cast<int>(rng.next_u64() % m.p_basis.size())];
      const CMat kp = k * p - p * k;
      CHECK((kp - project_onto(m.p_basis, kp)).norm_fro() <= 1e-10);
      const CMat pp = p * p2 - p2 * p;
      CHECK((pp - project_onto(m.k_basis, pp)).norm_fro() <= 1e-10);
    }
  }
}

TEST_CASE("validity ranges") {
  CHECK_THROWS_AS(symmetric_space(SpaceId::SUSO, 1), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_space(SpaceId::SOU, 1), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_space(SpaceId::SUSP, 1), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_space(SpaceId::SPU, 0), std::invalid_argument);
  CHECK_NOTHROW(symmetric_space(SpaceId::SPU, 1));
}

TEST_CASE("embedded K elements are members of G") {
  const std::pair<SpaceId, int> cells[] = {{SpaceId::SUSO, 3}, {SpaceId::SPU, 2},
                                           {SpaceId::SOU, 3},  {SpaceId::SUSP, 2}};
  for (const auto& [id, n] : cells) {
    const SymmetricSpaceModel m = symmetric_space(id, n);
    for (std::uint64_t s = 0; s < 10; ++s) {
      CHECK(membership_residual(m.G, random_embedded_K(m, s)) <= 1e-9);
    }
  }
}

TEST_CASE("space names round-trip") {
  for (const SpaceId id : {SpaceId::SUSO, SpaceId::SPU, SpaceId::SOU, SpaceId::SUSP}) {
    CHECK(space_from_string(space_name(id)) == id);
  }
  CHECK_THROWS_AS(space_from_string("so3"), std::invalid_argument);
}
