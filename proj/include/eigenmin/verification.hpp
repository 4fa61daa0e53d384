#pragma once

#include "eigenmin/report.hpp"
#include "eigenmin/sphere_examples.hpp"

namespace eigenmin {

/// Aggregate residuals of the eigen-identity sweep over draws x samples.
/// All residual fields use the mixed form |lhs - rhs| / (1 + |rhs|).
struct EigenCertification {
  double lambda_expected = 0.0;
  double mu_expected = 0.0;
  double lambda_measured = 0.0;  // L2 fit over all samples
  double mu_measured = 0.0;
  double max_tau_residual = 0.0;
  double max_kappa_residual = 0.0;
  double invariance_residual = 0.0;       // max |phi(pk) - phi(p)|, absolute
  double vertical_residual = 0.0;         // max |sum over k-basis of second derivatives|
  double pair_scaled_residual = 0.0;      // kappa(phi_a, phi_ca) against mu phi phi'
  double pair_independent_residual = 0.0; // same against an independent draw (reported only)
};

EigenCertification certify_eigen(const SymmetricSpaceModel& model, int draws, int samples,
                                 std::uint64_t seed, Backend backend,
                                 par::Mode mode = par::default_mode(),
                                 const EigenFamily* fixed_family = nullptr);

/// Max over `triples` random (point, direction) pairs and both orders of the
/// FD-vs-exact deviation |fd - exact| / (1 + |exact|).
double backend_agreement(const SymmetricSpaceModel& model, int triples, std::uint64_t seed,
                         par::Mode mode = par::default_mode());

struct FiberCertification {
  int zero_attempts = 0;
  int zero_successes = 0;
  double max_zero_residual = 0.0;
  double max_zero_membership = 0.0;
  int projection_count = 0;
  int max_projection_iters = 0;
  double min_fiber_margin = 0.0;
  int curvature_points = 0;
  double max_H_norm = 0.0;
  double min_control = 0.0;
  double median_control = 0.0;
  double max_control = 0.0;
  int scan_points = 0;
  bool scan_gated = false;
  double scan_min_margin = 0.0;
  /// dim K == dim G - 2: every level set is a union of right K-cosets, hence
  /// totally geodesic, and no nonzero-curvature control level exists.
  bool control_degenerate = false;
  std::vector<FiberPoint> points;
};

FiberCertification certify_fiber(const EigenFamily& fam, const SymmetricSpaceModel& model,
                                 int zero_seeds, int projections, int curvature_points,
                                 int scan_points, std::uint64_t seed,
                                 par::Mode mode = par::default_mode(),
                                 const FiberOptions& opts = {});

struct StructureSuite {
  double max_gram_residual = 0.0;
  bool p_dims_ok = false;
  double basis_independence_residual = 0.0;  // tau/kappa under orthonormal re-mixing
};

StructureSuite structure_suite(const SymmetricSpaceModel& model, std::uint64_t seed);

struct AppendixSweep {
  int n_max = 0;
  int draws = 0;
  double max_n2_identity_rel = 0.0;
  double max_n3_identity_rel = 0.0;
  bool skew_ok = true;
  double min_lower_bound_slack = 0.0;  // min of det_abs - (1 - 1e-10) |u1|^{2n}
  double max_perm_det_rel = 0.0;       // | |det(M P)| - |det M| | / |det M|
};

AppendixSweep appendix_sweep(int nmax, int draws, std::uint64_t seed);

// Report-producing drivers behind the CLI subcommands.
VerificationReport run_verify(const RunConfig& config);
VerificationReport run_fiber(const RunConfig& config);
VerificationReport run_appendix(const RunConfig& config, int nmax);
VerificationReport run_all(const RunConfig& config, int nmax);

/// The (space, n) grid used by the full verification sweep.
std::vector<std::pair<SpaceId, int>> acceptance_grid();

/// Family used by the drivers: loaded from config.params_path when set,
/// otherwise drawn deterministically with unit-norm parameters.
EigenFamily driver_family(const RunConfig& config);

}  // namespace eigenmin
