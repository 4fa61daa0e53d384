#include "eigenmin/appendix.hpp"

#include <cmath>

namespace eigenmin {

namespace {

double coeff(const RVec& u, const std::vector<RVec>& frame, int index_1based) {
  return rdot(u, frame[static_cast<std::size_t>(index_1based - 1)]);
}

}  // namespace

AppendixSystem build_system(int n, RVec u, std::vector<RVec> frame) {
  if (n < 2) throw std::invalid_argument("build_system: n >= 2");
  const int dim = 2 * n;
  if (static_cast<int>(u.size()) != dim) {
    throw std::invalid_argument("build_system: u must have length 2n");
  }
  if (static_cast<int>(frame.size()) != dim) {
    throw std::invalid_argument("build_system: frame must have 2n vectors");
  }
  double gram_dev = 0.0;
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(frame[i].size()) != dim) {
      throw std::invalid_argument("build_system: frame vector length mismatch");
    }
    for (int j = i; j < dim; ++j) {
      gram_dev = std::max(gram_dev,
                          std::abs(rdot(frame[i], frame[j]) - (i == j ? 1.0 : 0.0)));
    }
  }
  if (gram_dev > 1e-12) {
    throw std::invalid_argument("build_system: frame is not orthonormal, Gram deviation " +
                                std::to_string(gram_dev));
  }
  if (std::abs(rdot(u, frame[0])) == 0.0) {
    throw std::invalid_argument("build_system: (u, x_1) must be non-zero");
  }

  AppendixSystem sys;
  sys.n = n;
  sys.u = std::move(u);
  sys.frame = std::move(frame);
  sys.M.assign(dim, std::vector<CoeffEntry>(dim));

  // Derivative row pairs for s = 2..n with r = 1:
  //   row A(s): -(u,x_{n+s}) | col 1,  +(u,x_{n+1}) | col s,
  //             -(u,x_s)     | col n+1, +(u,x_1)    | col n+s
  //   row B(s): -(u,x_s)     | col 1,  +(u,x_1)     | col s,
  //             +(u,x_{n+s}) | col n+1, -(u,x_{n+1})| col n+s
  int row = 0;
  for (int s = 2; s <= n; ++s) {
    auto& A = sys.M[row++];
    A[0] = {-1, n + s};
    A[s - 1] = {+1, n + 1};
    A[n] = {-1, s};
    A[n + s - 1] = {+1, 1};
    auto& B = sys.M[row++];
    B[0] = {-1, s};
    B[s - 1] = {+1, 1};
    B[n] = {+1, n + s};
    B[n + s - 1] = {-1, n + 1};
  }
  // Full pairing row: (u, x_k) at column k.
  for (int k = 1; k <= dim; ++k) sys.M[row][k - 1] = {+1, k};
  ++row;
  // Negated value row: +(u, x_{n+k}) at column k, -(u, x_k) at column n+k.
  for (int k = 1; k <= n; ++k) {
    sys.M[row][k - 1] = {+1, n + k};
    sys.M[row][n + k - 1] = {-1, k};
  }
  return sys;
}

CoeffMatrix apply_permutation(const CoeffMatrix& M, const SignedColumnPermutation& P) {
  const int dim = static_cast<int>(M.size());
  CoeffMatrix out(dim, std::vector<CoeffEntry>(dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      CoeffEntry e = M[i][static_cast<std::size_t>(P.source[j])];
      e.sign *= P.sign[j];
      out[i][j] = e;
    }
  }
  return out;
}

SkewReduction skew_reduce(const AppendixSystem& sys) {
  const int dim = 2 * sys.n;

  // Candidate columns per row: the entries carrying index 1. The recipe
  // produces exactly one per row, but the search stays a proper matching in
  // case the structure ever changes.
  std::vector<std::vector<int>> candidates(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (sys.M[i][j].sign != 0 && sys.M[i][j].index == 1) candidates[i].push_back(j);
    }
    if (candidates[i].empty()) {
      throw std::runtime_error("skew_reduce: row " + std::to_string(i + 1) +
                               " has no (u,x_1) entry");
    }
  }

  std::vector<int> pick(dim, -1);
  std::vector<bool> used(dim, false);
  const auto assign = [&](auto&& self, int row) -> bool {
    if (row == dim) return true;
    for (int j : candidates[row]) {
      if (used[j]) continue;
      used[j] = true;
      pick[row] = j;
      if (self(self, row + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (!assign(assign, 0)) {
    throw std::runtime_error("skew_reduce: no column matching places (u,x_1) on the diagonal");
  }

  SkewReduction red;
  red.P.source.resize(dim);
  red.P.sign.resize(dim);
  for (int j = 0; j < dim; ++j) {
    red.P.source[j] = pick[j];
    red.P.sign[j] = sys.M[j][static_cast<std::size_t>(pick[j])].sign;  // make diagonal +1
  }
  red.M_tilde = apply_permutation(sys.M, red.P);

  red.S = red.M_tilde;
  for (int i = 0; i < dim; ++i) red.S[i][i] = {0, 0};
  for (int i = 0; i < dim; ++i) {
    if (red.M_tilde[i][i].sign != 1 || red.M_tilde[i][i].index != 1) {
      throw std::runtime_error("skew_reduce: diagonal entry is not +(u,x_1)");
    }
    for (int j = i + 1; j < dim; ++j) {
      const CoeffEntry& a = red.S[i][j];
      const CoeffEntry& b = red.S[j][i];
      const bool ok = (a.sign == 0 && b.sign == 0) ||
                      (a.sign != 0 && b.sign == -a.sign && a.index == b.index);
      if (!ok) {
        throw std::runtime_error("skew_reduce: remainder not structurally skew at (" +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  return red;
}

CMat realize(const CoeffMatrix& M, const RVec& u, const std::vector<RVec>& frame) {
  const int dim = static_cast<int>(M.size());
  CMat out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const CoeffEntry& e = M[i][j];
      if (e.sign != 0) out(i, j) = e.sign * coeff(u, frame, e.index);
    }
  }
  return out;
}

DetIdentities det_identities(const AppendixSystem& sys) {
  DetIdentities out;
  out.det_abs = std::abs(det(realize(sys.M, sys.u, sys.frame)));

  double u_norm2 = 0.0;
  for (int k = 1; k <= 2 * sys.n; ++k) {
    const double c = coeff(sys.u, sys.frame, k);
    u_norm2 += c * c;
  }
  const double u1 = coeff(sys.u, sys.frame, 1);
  out.lower_bound = std::pow(std::abs(u1), 2 * sys.n);

  if (sys.n == 2) {
    out.closed_form = true;
    out.predicted = u_norm2 * u_norm2;
  } else if (sys.n == 3) {
    out.closed_form = true;
    const double u4 = coeff(sys.u, sys.frame, 4);
    out.predicted = (u1 * u1 + u4 * u4) * u_norm2 * u_norm2;
  }
  return out;
}

}  // namespace eigenmin
