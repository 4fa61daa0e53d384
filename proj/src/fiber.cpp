#include "eigenmin/fiber.hpp"

#include <cmath>

#include "eigenmin/rng.hpp"

namespace eigenmin {

namespace {

void check_pairing(const EigenFamily& fam, const SymmetricSpaceModel& model) {
  if (fam.space != model.id || fam.n != model.n) {
    throw std::invalid_argument("fiber: family and model describe different spaces");
  }
}

/// Smallest singular value of a 2 x d matrix given as two rows.
double sigma_min_2rows(const RVec& r1, const RVec& r2) {
  const double g11 = rdot(r1, r1);
  const double g22 = rdot(r2, r2);
  const double g12 = rdot(r1, r2);
  const double tr = g11 + g22;
  const double disc = std::sqrt(std::max(0.0, (g11 - g22) * (g11 - g22) + 4.0 * g12 * g12));
  return std::sqrt(std::max(0.0, 0.5 * (tr - disc)));
}

double sigma_max_2rows(const RVec& r1, const RVec& r2) {
  const double g11 = rdot(r1, r1);
  const double g22 = rdot(r2, r2);
  const double g12 = rdot(r1, r2);
  const double tr = g11 + g22;
  const double disc = std::sqrt(std::max(0.0, (g11 - g22) * (g11 - g22) + 4.0 * g12 * g12));
  return std::sqrt(std::max(0.0, 0.5 * (tr + disc)));
}

/// Rows (Re, Im) of the gradient over the given basis, via exact derivatives.
void differential_rows(const ScalarField& field, const AlgebraBasis& basis, const CMat& p,
                       RVec& re_row, RVec& im_row) {
  const int d = basis.size();
  re_row.assign(d, 0.0);
  im_row.assign(d, 0.0);
  for (int i = 0; i < d; ++i) {
    const Complex d1 = field.exact_d1(p, basis[i]);
    re_row[i] = d1.real();
    im_row[i] = d1.imag();
  }
}

CMat combine(const AlgebraBasis& basis, const RVec& coeffs) {
  CMat X(basis[0].rows(), basis[0].cols());
  for (int i = 0; i < basis.size(); ++i) {
    if (coeffs[i] != 0.0) X += coeffs[i] * basis[i];
  }
  return X;
}

struct GnStatus {
  bool converged = false;
  int iterations = 0;
};

/// Damped Gauss-Newton sweep on F = (Re phi, Im phi) along the p-basis.
/// Returns early if the horizontal differential drops rank (throws when
/// `throw_on_rank` is set, otherwise reports failure).
GnStatus gauss_newton(const ScalarField& field, const SymmetricSpaceModel& model, CMat& p,
                      const FiberOptions& opts, bool throw_on_rank) {
  GnStatus st;
  RVec re_row, im_row;
  for (int it = 0; it < opts.max_gn_iters; ++it) {
    const Complex val = field.evaluate(p);
    if (std::abs(val) <= opts.tol_zero) {
      st.converged = true;
      st.iterations = it;
      return st;
    }
    differential_rows(field, model.p_basis, p, re_row, im_row);
    const double smin = sigma_min_2rows(re_row, im_row);
    const double smax = sigma_max_2rows(re_row, im_row);
    if (smin <= 1e-12 * std::max(1.0, smax)) {
      if (throw_on_rank) {
        throw std::runtime_error(
            "project_to_fiber: horizontal differential rank < 2 at iterate (sigma_min = " +
            std::to_string(smin) + ")");
      }
      st.iterations = it;
      return st;
    }
    // Minimum-norm correction: delta = -J^t (J J^t)^{-1} F.
    const double g11 = rdot(re_row, re_row);
    const double g22 = rdot(im_row, im_row);
    const double g12 = rdot(re_row, im_row);
    const double detg = g11 * g22 - g12 * g12;
    const double f1 = val.real(), f2 = val.imag();
    const double y1 = (g22 * f1 - g12 * f2) / detg;
    const double y2 = (-g12 * f1 + g11 * f2) / detg;
    RVec delta(re_row.size());
    for (std::size_t i = 0; i < delta.size(); ++i) {
      delta[i] = -(re_row[i] * y1 + im_row[i] * y2);
    }
    const CMat X = combine(model.p_basis, delta);
    double t = 1.0;
    CMat trial = p * mat_exp(X);
    for (int halvings = 0; halvings < 30; ++halvings) {
      if (std::abs(field.evaluate(trial)) < std::abs(val)) break;
      t *= 0.5;
      trial = p * mat_exp(t * X);
    }
    p = trial;
  }
  st.iterations = opts.max_gn_iters;
  st.converged = std::abs(field.evaluate(p)) <= opts.tol_zero;
  return st;
}

}  // namespace

double horizontal_margin(const EigenFamily& fam, const SymmetricSpaceModel& model,
                         const CMat& p) {
  check_pairing(fam, model);
  const ScalarField field = lift_field(fam);
  RVec re_row, im_row;
  differential_rows(field, model.p_basis, p, re_row, im_row);
  return sigma_min_2rows(re_row, im_row);
}

FiberPoint project_to_fiber(const EigenFamily& fam, const SymmetricSpaceModel& model,
                            const CMat& p0, const FiberOptions& opts, int* iterations_out) {
  check_pairing(fam, model);
  const double res0 = membership_residual(model.G, p0);
  if (res0 > 1e-6) {
    throw std::invalid_argument("project_to_fiber: start point fails membership, residual " +
                                std::to_string(res0));
  }
  const ScalarField field = lift_field(fam);
  CMat p = p0;
  const GnStatus st = gauss_newton(field, model, p, opts, /*throw_on_rank=*/true);
  if (iterations_out) *iterations_out = st.iterations;
  if (!st.converged) {
    throw std::runtime_error("project_to_fiber: no convergence after " +
                             std::to_string(opts.max_gn_iters) + " iterations, |phi| = " +
                             std::to_string(std::abs(field.evaluate(p))));
  }
  FiberPoint fp;
  fp.p = p;
  fp.value_residual = std::abs(field.evaluate(p));
  fp.gradient_margin = horizontal_margin(fam, model, p);
  return fp;
}

ZeroSearch find_zero(const EigenFamily& fam, const SymmetricSpaceModel& model,
                     std::uint64_t seed, const FiberOptions& opts) {
  check_pairing(fam, model);
  const ScalarField field = lift_field(fam);
  const AlgebraBasis g_basis = algebra_basis(model.G);

  ZeroSearch out;
  out.best_residual = INFINITY;
  CMat best_p;

  for (int restart = 0; restart < opts.max_restarts; ++restart) {
    CMat p = random_element(model.G, task_seed(seed, static_cast<std::uint64_t>(restart)));
    bool done = false;

    for (int it = 0; it < opts.max_descent_iters && !done; ++it) {
      const Complex val = field.evaluate(p);
      const double av = std::abs(val);
      if (av < out.best_residual) {
        out.best_residual = av;
        best_p = p;
      }
      ++out.iterations;

      if (av <= opts.tol_zero) {
        done = true;
        break;
      }
      if (av <= opts.gn_threshold) {
        CMat q = p;
        const GnStatus st = gauss_newton(field, model, q, opts, /*throw_on_rank=*/false);
        if (st.converged) {
          p = q;
          out.iterations += st.iterations;
          done = true;
          break;
        }
        // fall through to plain descent if the endgame stalled
      }

      // Steepest descent on |phi|^2: coefficient along Z is 2 Re(conj(phi) Z(phi)).
      RVec grad(g_basis.size());
      double gnorm2 = 0.0;
      for (int i = 0; i < g_basis.size(); ++i) {
        const Complex d1 = field.exact_d1(p, g_basis[i]);
        grad[i] = 2.0 * (std::conj(val) * d1).real();
        gnorm2 += grad[i] * grad[i];
      }
      if (gnorm2 <= 1e-28) break;  // critical point of |phi|^2 away from zero

      RVec step(grad.size());
      for (std::size_t i = 0; i < grad.size(); ++i) step[i] = -grad[i];
      const CMat X = combine(g_basis, step);

      double eta = opts.eta0;
      bool accepted = false;
      const double f0 = av * av;
      for (int halvings = 0; halvings < 60; ++halvings) {
        const CMat trial = p * mat_exp(eta * X);
        const Complex tv = field.evaluate(trial);
        if (std::norm(tv) <= f0 - opts.armijo_c * eta * gnorm2) {
          p = trial;
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) break;  // line search exhausted; restart
    }

    out.restarts = restart + 1;
    if (done) {
      const double mres = membership_residual(model.G, p);
      if (mres > opts.membership_tol) {
        throw std::runtime_error("find_zero: converged point fails membership, residual " +
                                 std::to_string(mres));
      }
      out.converged = true;
      out.point.p = p;
      out.point.value_residual = std::abs(field.evaluate(p));
      out.point.gradient_margin = horizontal_margin(fam, model, p);
      out.best_residual = out.point.value_residual;
      return out;
    }
  }

  out.converged = false;
  if (best_p.rows() > 0) {
    out.point.p = best_p;
    out.point.value_residual = out.best_residual;
    out.point.gradient_margin = horizontal_margin(fam, model, best_p);
  }
  return out;
}

double regularity_margin(const EigenFamily& fam, const SymmetricSpaceModel& model,
                         const std::vector<FiberPoint>& points) {
  check_pairing(fam, model);
  if (points.empty()) throw std::invalid_argument("regularity_margin: empty sample");
  double worst = INFINITY;
  for (const auto& fp : points) {
    worst = std::min(worst, horizontal_margin(fam, model, fp.p));
  }
  return worst;
}

double critical_point_scan(const EigenFamily& fam, const SymmetricSpaceModel& model, int count,
                           std::uint64_t seed, par::Mode mode) {
  check_pairing(fam, model);
  if (count < 1) throw std::invalid_argument("critical_point_scan: count >= 1");
  RVec margins(count, 0.0);
  par::for_each(
      static_cast<std::size_t>(count),
      [&](std::size_t i) {
        const CMat p = random_element(model.G, task_seed(seed, i));
        margins[i] = horizontal_margin(fam, model, p);
      },
      mode);
  double worst = INFINITY;
  for (const double m : margins) worst = std::min(worst, m);
  return worst;
}

namespace {

/// The estimator at an arbitrary point: mean curvature of the level set of
/// phi through p, in the normal frame spanned by the orthonormalized
/// gradients of (Re phi, Im phi).
MinimalityReport level_set_mean_curvature(const ScalarField& field, const GroupSpec& G,
                                          const CMat& p) {
  const AlgebraBasis basis = algebra_basis(G);
  const int m = basis.size();

  RVec g1, g2;
  differential_rows(field, basis, p, g1, g2);

  const double g11 = rdot(g1, g1), g22 = rdot(g2, g2), g12 = rdot(g1, g2);
  const double detg = g11 * g22 - g12 * g12;
  if (detg <= 1e-20 * std::max(1.0, g11 * g22)) {
    throw std::runtime_error("mean_curvature: gradients collinear, point is not regular");
  }

  // Orthonormal normal frame.
  RVec n1 = g1, n2 = g2;
  const double nn1 = rnorm(n1);
  for (auto& x : n1) x /= nn1;
  const double c = rdot(n2, n1);
  for (std::size_t i = 0; i < n2.size(); ++i) n2[i] -= c * n1[i];
  const double nn2 = rnorm(n2);
  for (auto& x : n2) x /= nn2;

  // Orthonormal tangent frame from the projected standard basis.
  std::vector<RVec> tangent;
  tangent.reserve(m - 2);
  for (int j = 0; j < m && static_cast<int>(tangent.size()) < m - 2; ++j) {
    RVec v(m, 0.0);
    v[j] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      double a = rdot(v, n1);
      for (int i = 0; i < m; ++i) v[i] -= a * n1[i];
      a = rdot(v, n2);
      for (int i = 0; i < m; ++i) v[i] -= a * n2[i];
      for (const auto& e : tangent) {
        a = rdot(v, e);
        for (int i = 0; i < m; ++i) v[i] -= a * e[i];
      }
    }
    const double nv = rnorm(v);
    if (nv > 1e-8) {
      for (auto& x : v) x /= nv;
      tangent.push_back(std::move(v));
    }
  }

  // Restricted Hessian traces of the two components.
  double T1 = 0.0, T2 = 0.0;
  for (const auto& e : tangent) {
    const CMat X = combine(basis, e);
    const Complex h = field.exact_d2(p, X);
    T1 += h.real();
    T2 += h.imag();
  }

  // Solve <grad f_a, grad f_b> H_b = -T_a for the gradient-frame coefficients.
  const double h1 = (-T1 * g22 + T2 * g12) / detg;
  const double h2 = (-T2 * g11 + T1 * g12) / detg;

  RVec w(m);
  for (int i = 0; i < m; ++i) w[i] = h1 * g1[i] + h2 * g2[i];

  MinimalityReport rep;
  rep.H_components = {rdot(w, n1), rdot(w, n2)};
  rep.H_norm = rnorm(w);
  rep.tangent_dim = static_cast<int>(tangent.size());
  return rep;
}

}  // namespace

MinimalityReport mean_curvature_estimate(const EigenFamily& fam,
                                         const SymmetricSpaceModel& model, const FiberPoint& fp,
                                         std::uint64_t control_seed, const FiberOptions& opts) {
  check_pairing(fam, model);
  if (fp.value_residual > 10.0 * opts.tol_zero) {
    throw std::invalid_argument("mean_curvature_estimate: point is not on the fiber, |phi| = " +
                                std::to_string(fp.value_residual));
  }
  if (fp.gradient_margin <= 1e-6) {
    throw std::invalid_argument("mean_curvature_estimate: point margin " +
                                std::to_string(fp.gradient_margin) + " too small");
  }
  const ScalarField field = lift_field(fam);
  MinimalityReport rep = level_set_mean_curvature(field, model.G, fp.p);
  if (rep.tangent_dim != model.G.algebra_dim() - 2) {
    throw std::runtime_error("mean_curvature_estimate: tangent frame has dimension " +
                             std::to_string(rep.tangent_dim));
  }

  // Negative control: the same estimator on the level set through a random
  // point, where nothing forces minimality.
  for (std::uint64_t k = 0;; ++k) {
    const CMat q = random_element(model.G, task_seed(control_seed, k));
    if (std::abs(field.evaluate(q)) < 1e-6) continue;  // too close to the zero fiber
    rep.control_H_norm = level_set_mean_curvature(field, model.G, q).H_norm;
    break;
  }
  return rep;
}

}  // namespace eigenmin
