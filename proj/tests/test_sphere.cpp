#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eigenmin/sphere_examples.hpp"

using namespace eigenmin;

TEST_CASE("phi_1 on S^3 is a (-3, -1) eigenfunction") {
  const auto m = sphere_example_check({SphereExample::Kind::sphere_phi_j, 1, 2, 2}, 1, 20);
  CHECK(std::abs(m.lambda + 3.0) <= 1e-7);
  CHECK(std::abs(m.mu + 1.0) <= 1e-7);
}

TEST_CASE("phi_1 on S^5 is a (-5, -1) eigenfunction") {
  const auto m = sphere_example_check({SphereExample::Kind::sphere_phi_j, 1, 2, 3}, 2, 20);
  CHECK(std::abs(m.lambda + 5.0) <= 1e-7);
  CHECK(std::abs(m.mu + 1.0) <= 1e-7);
}

TEST_CASE("phi_12 lift on S^5 measures the projective-space pair (-12, -4)") {
  const auto m = sphere_example_check({SphereExample::Kind::cp_phi_jk, 1, 2, 2}, 3, 20);
  CHECK(std::abs(m.lambda + 12.0) <= 1e-7);
  CHECK(std::abs(m.mu + 4.0) <= 1e-7);
}

TEST_CASE("phi_13 lift on S^7 measures (-16, -4)") {
  const auto m = sphere_example_check({SphereExample::Kind::cp_phi_jk, 1, 3, 3}, 4, 20);
  CHECK(std::abs(m.lambda + 16.0) <= 1e-7);
  CHECK(std::abs(m.mu + 4.0) <= 1e-7);
}

TEST_CASE("constant functions measure (0, 0)") {
  const auto m = measure_on_sphere(4, [](const RVec&) { return Complex(1.0, 0.5); }, 5, 10);
  CHECK(std::abs(m.lambda) <= 1e-9);
  CHECK(std::abs(m.mu) <= 1e-9);
}

TEST_CASE("index validation") {
  CHECK_THROWS_AS(sphere_example_check({SphereExample::Kind::sphere_phi_j, 3, 0, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sphere_example_check({SphereExample::Kind::cp_phi_jk, 2, 2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sphere_example_check({SphereExample::Kind::cp_phi_jk, 1, 4, 2}),
                  std::invalid_argument);
}
