#pragma once

#include <functional>

#include "eigenmin/cmat.hpp"

namespace eigenmin {

/// Round-sphere eigenfunction checks, run intrinsically: second derivatives
/// along great circles through random points with orthonormal tangent frames.
///   sphere_phi_j: phi_j = z_j on S^{2n-1} in C^n
///   cp_phi_jk:    phi_jk = z_j conj(z_k) on S^{2n+1} in C^{n+1}, the lift of
///                 the projective-space family through the Hopf fibration
struct SphereExample {
  enum class Kind { sphere_phi_j, cp_phi_jk };
  Kind kind{};
  int j = 1;
  int k = 2;  // ignored for sphere_phi_j
  int n = 2;
};

struct MeasuredEigen {
  double lambda = 0.0;
  double mu = 0.0;
  double lambda_dev = 0.0;  // max_i |tau_i - lambda phi_i|
  double mu_dev = 0.0;      // max_i |kappa_i - mu phi_i^2|
};

/// Least-squares (lambda, mu) over sampled points; the deviations expose any
/// point where the eigen relation is not met.
MeasuredEigen sphere_example_check(const SphereExample& ex, std::uint64_t seed = 1,
                                   int samples = 20);

/// Same measurement for an arbitrary complex function on S^{ambient_dim-1};
/// the named examples above go through this.
MeasuredEigen measure_on_sphere(int ambient_dim,
                                const std::function<Complex(const RVec&)>& phi,
                                std::uint64_t seed, int samples);

}  // namespace eigenmin
