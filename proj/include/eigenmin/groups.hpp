#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigenmin/cmat.hpp"

namespace eigenmin {

enum class GroupFamily { SO, U, SU, Sp };

/// A classical matrix group. For Sp(n) the standard 2n x 2n complex
/// representation is used, so ambient_dim() is 2n there.
struct GroupSpec {
  GroupFamily family{};
  int n = 0;

  int ambient_dim() const { return family == GroupFamily::Sp ? 2 * n : n; }
  int algebra_dim() const;
  std::string name() const;

  static GroupSpec SO(int n) { return {GroupFamily::SO, n}; }
  static GroupSpec U(int n) { return {GroupFamily::U, n}; }
  static GroupSpec SU(int n) { return {GroupFamily::SU, n}; }
  static GroupSpec Sp(int n) { return {GroupFamily::Sp, n}; }
};

/// Ordered orthonormal set of matrices under inner(). Construction checks the
/// Gram matrix against the identity to 1e-12.
struct AlgebraBasis {
  std::vector<CMat> elements;
  std::string label;

  AlgebraBasis() = default;
  AlgebraBasis(std::vector<CMat> elems, std::string lbl);

  int size() const { return static_cast<int>(elements.size()); }
  const CMat& operator[](int i) const { return elements[static_cast<std::size_t>(i)]; }
  double gram_residual() const;
};

/// Canonical orthonormal basis of the Lie algebra:
///   so(n):  { Y_rs }
///   u(n):   { Y_rs, iX_rs } + { iD_t }
///   su(n):  { Y_rs, iX_rs } + (n-1) orthonormal traceless imaginary diagonals
///   sp(n):  the seven-block-symbol list (Y^a, X^a, X^b, X^c, D^a, D^b, D^c)
AlgebraBasis algebra_basis(const GroupSpec& G);

/// Max of the defining-relation residuals; 0 exactly on members.
double membership_residual(const GroupSpec& G, const CMat& M);

/// exp of a Gaussian algebra element; lands in the identity component with
/// membership residual at machine level. Deterministic in seed.
CMat random_element(const GroupSpec& G, std::uint64_t seed, double scale = 1.0);
CMat random_algebra_element(const GroupSpec& G, std::uint64_t seed, double scale = 1.0);

/// U(n) -> SO(2n), z = x + iy |-> [[x, -y], [y, x]].
CMat embed_U_in_SO2n(const CMat& z);
/// U(n) -> Sp(n), z = x + iy |-> [[x, y], [-y, x]].
CMat embed_U_in_Sp2n(const CMat& z);
/// Sp(n) -> SU(2n): a 2n x 2n element [[z, w], [-conj(w), conj(z)]] is mapped
/// to [[z, -conj(w)], [w, conj(z)]].
CMat embed_Sp_in_SU2n(const CMat& q);

/// Two-pass modified Gram-Schmidt with rank revealing: generators whose
/// residual after projection drops below rank_tol are dropped.
AlgebraBasis orthonormalize_basis(const std::vector<CMat>& generators, std::string label,
                                  double rank_tol = 1e-10);

/// Orthogonal projection of Z onto the real span of the basis.
CMat project_onto(const AlgebraBasis& basis, const CMat& Z);

}  // namespace eigenmin
