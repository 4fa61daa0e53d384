#pragma once

#include <array>

#include "eigenmin/eigenfamily.hpp"
#include "eigenmin/parallel.hpp"

namespace eigenmin {

struct FiberOptions {
  double tol_zero = 1e-10;      // |phi| gate for fiber membership
  int max_restarts = 50;        // fresh random starts in find_zero
  int max_descent_iters = 500;  // per restart
  double eta0 = 0.5;            // initial Armijo step
  double armijo_c = 0.25;
  double gn_threshold = 1e-3;   // hand over to Gauss-Newton below this |phi|
  int max_gn_iters = 40;
  double membership_tol = 1e-8;
  double margin_gate = 1e-3;    // dimensionless, assumes unit-norm parameters
};

/// A sampled point of the zero fiber with its certificates: |phi| at the
/// point and the smallest singular value of the 2 x dim(p) horizontal
/// differential (rows Re/Im of the gradient over the p-basis).
struct FiberPoint {
  CMat p;
  double value_residual = 0.0;
  double gradient_margin = 0.0;
};

struct ZeroSearch {
  bool converged = false;
  FiberPoint point;
  double best_residual = 0.0;  // best |phi| seen, meaningful on failure
  int restarts = 0;
  int iterations = 0;
};

/// Smallest singular value of the horizontal differential at p.
double horizontal_margin(const EigenFamily& fam, const SymmetricSpaceModel& model, const CMat& p);

/// Riemannian descent on |phi|^2 over the full algebra basis with Armijo
/// backtracking and restarts; a Gauss-Newton endgame finishes the last few
/// digits once |phi| is small. Never throws on non-convergence: the result
/// carries the best residual.
ZeroSearch find_zero(const EigenFamily& fam, const SymmetricSpaceModel& model,
                     std::uint64_t seed, const FiberOptions& opts = {});

/// Damped Gauss-Newton on F = (Re phi, Im phi) with horizontal corrections
/// and exp retraction. Throws if the horizontal differential drops rank at an
/// iterate or the iteration fails to reach tol_zero.
FiberPoint project_to_fiber(const EigenFamily& fam, const SymmetricSpaceModel& model,
                            const CMat& p0, const FiberOptions& opts = {},
                            int* iterations_out = nullptr);

/// Min over the sample of the per-point horizontal margins. Positive margin
/// certifies regularity at the samples.
double regularity_margin(const EigenFamily& fam, const SymmetricSpaceModel& model,
                         const std::vector<FiberPoint>& points);

/// Min horizontal margin over `count` random group points. The families on
/// SUSO and SPU are submersions everywhere, so this is gated there; for the
/// other two spaces it is reported without a gate.
double critical_point_scan(const EigenFamily& fam, const SymmetricSpaceModel& model, int count,
                           std::uint64_t seed, par::Mode mode = par::default_mode());

/// Mean curvature vector of the level set through a point, recovered from
/// restricted Hessian traces: Sum_i Hess f_a(e_i, e_i) + <grad f_a, H> = 0
/// for each component f_a of F = (Re phi, Im phi) vanishing on the level set.
struct MinimalityReport {
  std::array<double, 2> H_components{};  // in the orthonormal normal frame
  double H_norm = 0.0;
  int tangent_dim = 0;
  double control_H_norm = 0.0;  // same estimator on a nonzero level set
};

MinimalityReport mean_curvature_estimate(const EigenFamily& fam,
                                         const SymmetricSpaceModel& model, const FiberPoint& fp,
                                         std::uint64_t control_seed = 99,
                                         const FiberOptions& opts = {});

}  // namespace eigenmin
