#pragma once

#include "eigenmin/diff_ops.hpp"
#include "eigenmin/spaces.hpp"

namespace eigenmin {

/// Parameter regime for SO(2n)/U(n) families: `strict` is the
/// isotropic-orthogonal regime (a = u+iv isotropic, b real, (a,a)=(a,b)=0)
/// required by the fiber pipeline; `quadric` only asks for
/// (a,a)(b,b) - (a,b)^2 = 0.
enum class SOUMode { strict, quadric };

/// One eigenfunction lift: the matrix A, the trace form (with or without the
/// complex structure J), and the expected eigenvalue pair
///   tau(phi) = lambda phi,   kappa(phi, phi) = mu phi^2.
struct EigenFamily {
  SpaceId space{};
  int n = 0;
  CVec a;
  CVec b;  // empty for SUSO / SPU
  CMat A;
  double lambda = 0.0;
  double mu = 0.0;

  bool uses_J() const { return space == SpaceId::SOU || space == SpaceId::SUSP; }
  int ambient_dim() const;
};

/// Expected (lambda, mu) for the space:
///   SUSO: (-2(n^2+n-2)/n, -4(n-1)/n)
///   SPU:  (-2(n+1), -2)
///   SOU:  (-2(n-1), -1)
///   SUSP: (-2(2n^2-n-1)/n, -2(n-1)/n)
std::pair<double, double> expected_eigenvalues(SpaceId id, int n);

/// Validates the parameter constraints of the space and assembles A:
/// A = a^t a for SUSO/SPU, A = (a^t b - b^t a)/sqrt(2) for SOU/SUSP.
/// Violations throw with the violated relation spelled out.
EigenFamily make_family(SpaceId id, int n, CVec a, CVec b = {}, SOUMode mode = SOUMode::strict);

/// The lift value trace(A p p^t) resp. trace(A p J p^t). Requires p to pass
/// membership for the space's group.
Complex evaluate(const EigenFamily& fam, const CMat& p);

/// ScalarField with exact first and second derivative evaluators along
/// one-parameter subgroups attached (chain rule on the trace form). The
/// evaluate closure is the unchecked fast path.
ScalarField lift_field(const EigenFamily& fam);

struct FamilyParams {
  CVec a;
  CVec b;  // empty when the space takes a single parameter
};

/// Deterministic parameter draws satisfying the space's constraints:
/// SOU builds an orthonormal real triple (u, v, b) and returns a = u + iv;
/// the other spaces draw Gaussian complex vectors (with an independence
/// check for SUSP). Degenerate draws are regenerated.
FamilyParams sample_parameters(SpaceId id, int n, std::uint64_t seed);

/// Same parameters scaled to unit Hermitian norm; rescaling by a scalar
/// preserves every constraint, and the fiber gates assume unit parameters.
FamilyParams normalized(const FamilyParams& params);

/// Load parameters from JSON: {"space": "...", "n": int, "a_re": [...],
/// "a_im": [...], "b_re": [...], "b_im": [...]} (b_* optional).
EigenFamily family_from_json_file(const std::string& path, SOUMode mode = SOUMode::strict);

}  // namespace eigenmin
