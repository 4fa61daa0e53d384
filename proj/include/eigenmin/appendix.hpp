#pragma once

#include "eigenmin/cmat.hpp"

namespace eigenmin {

/// Symbolic entry of the linear systems: sign * (u, x_index), with sign = 0
/// marking a structural zero. Keeping entries symbolic makes the
/// skew-symmetry test and the column search exact, independent of
/// floating-point coincidences.
struct CoeffEntry {
  int sign = 0;   // -1, 0, +1
  int index = 0;  // 1..2n when sign != 0
};

using CoeffMatrix = std::vector<std::vector<CoeffEntry>>;

/// The 2n x 2n system attached to a frame and a direction u: for s = 2..n a
/// pair of derivative rows, then the full pairing row, then the negated
/// value row (the printed matrices carry the opposite sign from the displayed
/// equation; the determinant magnitude is unaffected).
struct AppendixSystem {
  int n = 0;
  CoeffMatrix M;
  RVec u;                   // length 2n
  std::vector<RVec> frame;  // 2n orthonormal vectors x_k
};

/// Requires (u, x_1) != 0 and an orthonormal frame.
AppendixSystem build_system(int n, RVec u, std::vector<RVec> frame);

/// Signed column permutation: new column j is sign[j] * (old column source[j]).
struct SignedColumnPermutation {
  std::vector<int> source;  // 0-based old column index
  std::vector<int> sign;
};

struct SkewReduction {
  SignedColumnPermutation P;
  CoeffMatrix M_tilde;  // M * P = (u,x_1) I + S
  CoeffMatrix S;        // structurally skew-symmetric remainder
};

CoeffMatrix apply_permutation(const CoeffMatrix& M, const SignedColumnPermutation& P);

/// Finds the signed permutation placing +(u,x_1) on the diagonal, then checks
/// the remainder S is structurally skew-symmetric (equal index, opposite sign
/// across the diagonal). Throws if no such permutation exists.
SkewReduction skew_reduce(const AppendixSystem& sys);

/// Numeric realization with the system's u and frame.
CMat realize(const CoeffMatrix& M, const RVec& u, const std::vector<RVec>& frame);

struct DetIdentities {
  double det_abs = 0.0;
  double predicted = 0.0;    // |u|^4 for n = 2, ((u,x1)^2 + (u,x4)^2)|u|^4 for n = 3
  bool closed_form = false;  // predicted is only available for n = 2, 3
  double lower_bound = 0.0;  // |(u,x_1)|^{2n}, valid for every n
};

DetIdentities det_identities(const AppendixSystem& sys);

}  // namespace eigenmin
