#include "eigenmin/sphere_examples.hpp"

#include <cmath>

#include "eigenmin/diff_ops.hpp"
#include "eigenmin/rng.hpp"

namespace eigenmin {

namespace {

RVec random_unit_vector(int dim, Rng& rng) {
  for (;;) {
    RVec p(dim);
    for (auto& x : p) x = rng.gaussian();
    const double np = rnorm(p);
    if (np > 1e-6) {
      for (auto& x : p) x /= np;
      return p;
    }
  }
}

/// Orthonormal tangent frame at p: standard basis vectors projected off p,
/// Gram-Schmidt with rank revealing (one of them collapses).
std::vector<RVec> tangent_frame(const RVec& p) {
  const int d = static_cast<int>(p.size());
  std::vector<RVec> frame;
  for (int j = 0; j < d && static_cast<int>(frame.size()) < d - 1; ++j) {
    RVec v(d, 0.0);
    v[j] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      const double cp = rdot(v, p);
      for (int t = 0; t < d; ++t) v[t] -= cp * p[t];
      for (const auto& e : frame) {
        const double c = rdot(v, e);
        for (int t = 0; t < d; ++t) v[t] -= c * e[t];
      }
    }
    const double nv = rnorm(v);
    if (nv > 1e-8) {
      for (auto& x : v) x /= nv;
      frame.push_back(std::move(v));
    }
  }
  return frame;
}

}  // namespace

MeasuredEigen measure_on_sphere(int ambient_dim,
                                const std::function<Complex(const RVec&)>& phi,
                                std::uint64_t seed, int samples) {
  const FdSteps steps;
  std::vector<Complex> phis(samples), taus(samples), kappas(samples);

  for (int s = 0; s < samples; ++s) {
    Rng rng(task_seed(seed, static_cast<std::uint64_t>(s)));
    const RVec p = random_unit_vector(ambient_dim, rng);
    const auto frame = tangent_frame(p);

    Complex tau = 0.0, kappa = 0.0;
    RVec q(ambient_dim);
    for (const auto& e : frame) {
      const auto along = [&](double t) {
        const double c = std::cos(t), sn = std::sin(t);
        for (int i = 0; i < ambient_dim; ++i) q[i] = c * p[i] + sn * e[i];
        return phi(q);
      };
      const Complex d1 = fd_first(along, steps.h1);
      tau += fd_second(along, steps.h2);
      kappa += d1 * d1;
    }
    phis[s] = phi(p);
    taus[s] = tau;
    kappas[s] = kappa;
  }

  // L2 fits lambda = <tau, phi> / <phi, phi> and mu likewise against phi^2.
  Complex num_l = 0.0, num_m = 0.0;
  double den_l = 0.0, den_m = 0.0;
  for (int s = 0; s < samples; ++s) {
    num_l += std::conj(phis[s]) * taus[s];
    den_l += std::norm(phis[s]);
    const Complex p2 = phis[s] * phis[s];
    num_m += std::conj(p2) * kappas[s];
    den_m += std::norm(p2);
  }
  MeasuredEigen out;
  out.lambda = den_l > 1e-300 ? (num_l / den_l).real() : 0.0;
  out.mu = den_m > 1e-300 ? (num_m / den_m).real() : 0.0;
  for (int s = 0; s < samples; ++s) {
    out.lambda_dev = std::max(out.lambda_dev, std::abs(taus[s] - out.lambda * phis[s]));
    out.mu_dev = std::max(out.mu_dev, std::abs(kappas[s] - out.mu * phis[s] * phis[s]));
  }
  return out;
}

MeasuredEigen sphere_example_check(const SphereExample& ex, std::uint64_t seed, int samples) {
  if (ex.n < 1) throw std::invalid_argument("sphere_example_check: n >= 1");

  if (ex.kind == SphereExample::Kind::sphere_phi_j) {
    if (ex.j < 1 || ex.j > ex.n) {
      throw std::invalid_argument("sphere_example_check: phi_j needs 1 <= j <= n");
    }
    const int dim = 2 * ex.n;  // S^{2n-1} in R^{2n} = C^n
    const int j = ex.j;
    const auto phi = [j](const RVec& x) {
      return Complex(x[2 * (j - 1)], x[2 * (j - 1) + 1]);
    };
    return measure_on_sphere(dim, phi, seed, samples);
  }

  if (ex.j < 1 || ex.j >= ex.k || ex.k > ex.n + 1) {
    throw std::invalid_argument("sphere_example_check: phi_jk needs 1 <= j < k <= n+1");
  }
  const int dim = 2 * ex.n + 2;  // S^{2n+1} in C^{n+1}
  const int j = ex.j, k = ex.k;
  const auto phi = [j, k](const RVec& x) {
    const Complex zj(x[2 * (j - 1)], x[2 * (j - 1) + 1]);
    const Complex zk(x[2 * (k - 1)], x[2 * (k - 1) + 1]);
    return zj * std::conj(zk);
  };
  return measure_on_sphere(dim, phi, seed, samples);
}

}  // namespace eigenmin
