#pragma once

#include <functional>

#include "eigenmin/groups.hpp"

namespace eigenmin {

/// The four symmetric-space families handled here:
///   SUSO  SU(n)/SO(n)    (n >= 2)
///   SPU   Sp(n)/U(n)     (n >= 1)
///   SOU   SO(2n)/U(n)    (n >= 2)
///   SUSP  SU(2n)/Sp(n)   (n >= 2)
enum class SpaceId { SUSO, SPU, SOU, SUSP };

std::string space_name(SpaceId id);
SpaceId space_from_string(const std::string& s);

/// G, the embedded subgroup K, an orthonormal basis of the horizontal space p
/// (orthogonal complement of k in g) and one of the subalgebra k itself.
/// embed_K maps an element of the K parameter group into G.
struct SymmetricSpaceModel {
  SpaceId id{};
  int n = 0;
  GroupSpec G;
  GroupSpec K;  // parameter group of the subgroup
  AlgebraBasis p_basis;
  AlgebraBasis k_basis;
  std::function<CMat(const CMat&)> embed_K;

  int expected_p_dim() const;
};

/// Build the model: realize the generator sets for p verbatim, orthonormalize
/// with rank revealing, and check dim p + dim k = dim g plus p | k
/// orthogonality to 1e-12. Throws on n outside the family's validity range.
SymmetricSpaceModel symmetric_space(SpaceId id, int n);

/// Random element of the embedded subgroup, for invariance sweeps.
CMat random_embedded_K(const SymmetricSpaceModel& model, std::uint64_t seed);

}  // namespace eigenmin
