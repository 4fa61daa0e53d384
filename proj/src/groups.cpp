#include "eigenmin/groups.hpp"

#include <cmath>

#include "eigenmin/generators.hpp"
#include "eigenmin/rng.hpp"

namespace eigenmin {

namespace {

const Complex kI(0.0, 1.0);

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

int GroupSpec::algebra_dim() const {
  switch (family) {
    case GroupFamily::SO:
      return n * (n - 1) / 2;
    case GroupFamily::U:
      return n * n;
    case GroupFamily::SU:
      return n * n - 1;
    case GroupFamily::Sp:
      return n * (2 * n + 1);
  }
  return 0;
}

std::string GroupSpec::name() const {
  switch (family) {
    case GroupFamily::SO:
      return "SO(" + std::to_string(n) + ")";
    case GroupFamily::U:
      return "U(" + std::to_string(n) + ")";
    case GroupFamily::SU:
      return "SU(" + std::to_string(n) + ")";
    case GroupFamily::Sp:
      return "Sp(" + std::to_string(n) + ")";
  }
  return "?";
}

AlgebraBasis::AlgebraBasis(std::vector<CMat> elems, std::string lbl)
    : elements(std::move(elems)), label(std::move(lbl)) {
  const double g = gram_residual();
  if (g > 1e-12) {
    throw std::invalid_argument("AlgebraBasis '" + label + "': Gram residual " +
                                std::to_string(g));
  }
}

double AlgebraBasis::gram_residual() const {
  double worst = 0.0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i; j < size(); ++j) {
      const double g = inner(elements[i], elements[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

AlgebraBasis orthonormalize_basis(const std::vector<CMat>& generators, std::string label,
                                  double rank_tol) {
  std::vector<CMat> out;
  for (const CMat& g : generators) {
    CMat v = g;
    for (int pass = 0; pass < 2; ++pass) {
      for (const CMat& b : out) v -= inner(v, b) * b;
    }
    const double nv = v.norm_fro();
    if (nv > rank_tol) out.push_back((1.0 / nv) * v);
  }
  return AlgebraBasis(std::move(out), std::move(label));
}

CMat project_onto(const AlgebraBasis& basis, const CMat& Z) {
  CMat acc(Z.rows(), Z.cols());
  for (const CMat& b : basis.elements) acc += inner(Z, b) * b;
  return acc;
}

namespace {

std::vector<CMat> so_basis(int n) {
  std::vector<CMat> out;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) out.push_back(gen_Y(n, r, s));
  return out;
}

std::vector<CMat> u_basis(int n) {
  std::vector<CMat> out = so_basis(n);
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) out.push_back(kI * gen_X(n, r, s));
  for (int t = 1; t <= n; ++t) out.push_back(kI * gen_D(n, t));
  return out;
}

std::vector<CMat> su_basis(int n) {
  std::vector<CMat> out = so_basis(n);
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) out.push_back(kI * gen_X(n, r, s));
  // Traceless imaginary diagonals: Gram-Schmidt of {iD_t} against the unit
  // trace direction E = i I / sqrt(n), keeping the first n-1 survivors.
  const CMat E = (kI * (1.0 / std::sqrt(double(n)))) * CMat::identity(n);
  std::vector<CMat> diag;
  for (int t = 1; t <= n; ++t) {
    CMat v = kI * gen_D(n, t);
    v -= inner(v, E) * E;
    for (const CMat& b : diag) v -= inner(v, b) * b;
    const double nv = v.norm_fro();
    if (nv > 1e-10) diag.push_back((1.0 / nv) * v);
  }
  out.insert(out.end(), diag.begin(), diag.end());
  return out;
}

CMat sp_block(const CMat& tl, const CMat& tr, const CMat& bl, const CMat& br) {
  const int n = tl.rows();
  CMat m(2 * n, 2 * n);
  m.set_block(0, 0, tl);
  m.set_block(0, n, tr);
  m.set_block(n, 0, bl);
  m.set_block(n, n, br);
  return m;
}

std::vector<CMat> sp_basis(int n) {
  const double c = 1.0 / std::sqrt(2.0);
  const CMat Z0(n, n);
  std::vector<CMat> out;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat Y = gen_Y(n, r, s);
      out.push_back(c * sp_block(Y, Z0, Z0, Y));  // Y^a
    }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat iX = kI * gen_X(n, r, s);
      out.push_back(c * sp_block(iX, Z0, Z0, -iX));  // X^a
    }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat iX = kI * gen_X(n, r, s);
      out.push_back(c * sp_block(Z0, iX, iX, Z0));  // X^b
    }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat X = gen_X(n, r, s);
      out.push_back(c * sp_block(Z0, X, -X, Z0));  // X^c
    }
  for (int t = 1; t <= n; ++t) {
    const CMat iD = kI * gen_D(n, t);
    out.push_back(c * sp_block(iD, Z0, Z0, -iD));  // D^a
  }
  for (int t = 1; t <= n; ++t) {
    const CMat iD = kI * gen_D(n, t);
    out.push_back(c * sp_block(Z0, iD, iD, Z0));  // D^b
  }
  for (int t = 1; t <= n; ++t) {
    const CMat D = gen_D(n, t);
    out.push_back(c * sp_block(Z0, D, -D, Z0));  // D^c
  }
  return out;
}

}  // namespace

AlgebraBasis algebra_basis(const GroupSpec& G) {
  require(G.n >= 1, "algebra_basis: n >= 1");
  switch (G.family) {
    case GroupFamily::SO:
      return AlgebraBasis(so_basis(G.n), "so(" + std::to_string(G.n) + ")");
    case GroupFamily::U:
      return AlgebraBasis(u_basis(G.n), "u(" + std::to_string(G.n) + ")");
    case GroupFamily::SU:
      return AlgebraBasis(su_basis(G.n), "su(" + std::to_string(G.n) + ")");
    case GroupFamily::Sp:
      return AlgebraBasis(sp_basis(G.n), "sp(" + std::to_string(G.n) + ")");
  }
  throw std::invalid_argument("algebra_basis: unknown family");
}

double membership_residual(const GroupSpec& G, const CMat& M) {
  const int d = G.ambient_dim();
  require(M.rows() == d && M.cols() == d, "membership_residual: wrong shape for " + G.name());
  const CMat I = CMat::identity(d);
  const double unitary = (M * M.conj_transpose() - I).norm_fro();
  switch (G.family) {
    case GroupFamily::SO: {
      const double real_dev = M.imag_part().norm_fro();
      const double det_dev = std::abs(det(M) - Complex(1.0));
      return std::max({unitary, real_dev, det_dev});
    }
    case GroupFamily::U:
      return unitary;
    case GroupFamily::SU: {
      const double det_dev = std::abs(det(M) - Complex(1.0));
      return std::max(unitary, det_dev);
    }
    case GroupFamily::Sp: {
      const int n = G.n;
      const CMat tl = M.block(0, 0, n, n);
      const CMat tr = M.block(0, n, n, n);
      const CMat bl = M.block(n, 0, n, n);
      const CMat br = M.block(n, n, n, n);
      const double pat = std::max((bl + tr.conj()).norm_fro(), (br - tl.conj()).norm_fro());
      return std::max(unitary, pat);
    }
  }
  throw std::invalid_argument("membership_residual: unknown family");
}

CMat random_algebra_element(const GroupSpec& G, std::uint64_t seed, double scale) {
  const AlgebraBasis basis = algebra_basis(G);
  Rng rng(seed);
  CMat Z(G.ambient_dim(), G.ambient_dim());
  for (const CMat& b : basis.elements) Z += (scale * rng.gaussian()) * b;
  return Z;
}

CMat random_element(const GroupSpec& G, std::uint64_t seed, double scale) {
  require(scale >= 0.0, "random_element: scale >= 0");
  if (scale == 0.0) return CMat::identity(G.ambient_dim());
  return mat_exp(random_algebra_element(G, seed, scale));
}

CMat embed_U_in_SO2n(const CMat& z) {
  require(z.is_square(), "embed_U_in_SO2n: non-square");
  const int n = z.rows();
  const double res = membership_residual(GroupSpec::U(n), z);
  if (res > 1e-10) {
    throw std::invalid_argument("embed_U_in_SO2n: U(n) membership residual " +
                                std::to_string(res));
  }
  const CMat x = z.real_part();
  const CMat y = z.imag_part();
  CMat m(2 * n, 2 * n);
  m.set_block(0, 0, x);
  m.set_block(0, n, -y);
  m.set_block(n, 0, y);
  m.set_block(n, n, x);
  return m;
}

CMat embed_U_in_Sp2n(const CMat& z) {
  require(z.is_square(), "embed_U_in_Sp2n: non-square");
  const int n = z.rows();
  const double res = membership_residual(GroupSpec::U(n), z);
  if (res > 1e-10) {
    throw std::invalid_argument("embed_U_in_Sp2n: U(n) membership residual " +
                                std::to_string(res));
  }
  const CMat x = z.real_part();
  const CMat y = z.imag_part();
  CMat m(2 * n, 2 * n);
  m.set_block(0, 0, x);
  m.set_block(0, n, y);
  m.set_block(n, 0, -y);
  m.set_block(n, n, x);
  return m;
}

CMat embed_Sp_in_SU2n(const CMat& q) {
  require(q.is_square() && q.rows() % 2 == 0, "embed_Sp_in_SU2n: needs 2n x 2n input");
  const int n = q.rows() / 2;
  const double res = membership_residual(GroupSpec::Sp(n), q);
  if (res > 1e-10) {
    throw std::invalid_argument("embed_Sp_in_SU2n: Sp(n) membership residual " +
                                std::to_string(res));
  }
  // The input pattern represents z + w j; the target pattern represents
  // z + j w', and the same abstract element has w' = conj(w).
  const CMat z = q.block(0, 0, n, n);
  const CMat w = q.block(0, n, n, n);
  CMat m(2 * n, 2 * n);
  m.set_block(0, 0, z);
  m.set_block(0, n, -w);
  m.set_block(n, 0, w.conj());
  m.set_block(n, n, z.conj());
  return m;
}

}  // namespace eigenmin
