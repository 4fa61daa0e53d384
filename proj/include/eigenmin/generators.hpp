#pragma once

#include "eigenmin/cmat.hpp"

namespace eigenmin {

/// Canonical generator matrices. Indices are 1-based throughout:
///   E(i,j)   unit matrix E_ij
///   D(t)     diagonal unit E_tt
///   X(r,s)   (E_rs + E_sr)/sqrt(2),   r < s
///   Y(r,s)   (E_rs - E_sr)/sqrt(2),   r < s
///   Drs(r,s) (E_rr - E_ss)/sqrt(2),   r < s
///   J(n)     [[0, I_n], [-I_n, 0]], a 2n x 2n matrix
/// For J, `size` is the block size n.
struct GeneratorId {
  enum class Kind { E, D, X, Y, Drs, J };
  Kind kind{};
  int size = 0;
  int i = 0;
  int j = 0;

  static GeneratorId E(int i, int j, int size) { return {Kind::E, size, i, j}; }
  static GeneratorId D(int t, int size) { return {Kind::D, size, t, 0}; }
  static GeneratorId X(int r, int s, int size) { return {Kind::X, size, r, s}; }
  static GeneratorId Y(int r, int s, int size) { return {Kind::Y, size, r, s}; }
  static GeneratorId Drs(int r, int s, int size) { return {Kind::Drs, size, r, s}; }
  static GeneratorId J(int n) { return {Kind::J, n, 0, 0}; }
};

/// Realize a generator as a dense matrix. Invalid indices throw
/// std::invalid_argument.
CMat generator(const GeneratorId& id);

// Direct forms used all over the basis constructions.
CMat gen_E(int n, int i, int j);
CMat gen_D(int n, int t);
CMat gen_X(int n, int r, int s);
CMat gen_Y(int n, int r, int s);
CMat gen_Drs(int n, int r, int s);
CMat gen_J(int n);

}  // namespace eigenmin
