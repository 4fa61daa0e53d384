#include "eigenmin/spaces.hpp"

#include <cmath>

#include "eigenmin/generators.hpp"

namespace eigenmin {

namespace {

const Complex kI(0.0, 1.0);

CMat four_block(int n, const CMat& tl, const CMat& tr, const CMat& bl, const CMat& br) {
  CMat m(2 * n, 2 * n);
  m.set_block(0, 0, tl);
  m.set_block(0, n, tr);
  m.set_block(n, 0, bl);
  m.set_block(n, n, br);
  return m;
}

// p generators of su(n) = so(n) + i p with p the symmetric traceless matrices:
// { iX_rs, iD_rs }.
std::vector<CMat> suso_p_generators(int n) {
  std::vector<CMat> out;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) out.push_back(kI * gen_X(n, r, s));
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) out.push_back(kI * gen_Drs(n, r, s));
  return out;
}

// sp(n) = u(n) + p with generators X^a, D^a, X^b, D^b. The printed X
// coefficient i/2 is kept verbatim; orthonormalization fixes the scale.
std::vector<CMat> spu_p_generators(int n) {
  const CMat Z0(n, n);
  std::vector<CMat> out;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat X = gen_X(n, r, s);
      out.push_back((0.5 * kI) * four_block(n, X, Z0, Z0, -X));  // X^a
    }
  for (int t = 1; t <= n; ++t) {
    const CMat D = gen_D(n, t);
    out.push_back((kI / std::sqrt(2.0)) * four_block(n, D, Z0, Z0, -D));  // D^a
  }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat X = gen_X(n, r, s);
      out.push_back((0.5 * kI) * four_block(n, Z0, X, X, Z0));  // X^b
    }
  for (int t = 1; t <= n; ++t) {
    const CMat D = gen_D(n, t);
    out.push_back((kI / std::sqrt(2.0)) * four_block(n, Z0, D, D, Z0));  // D^b
  }
  return out;
}

// u(n) embedded in sp(n) via z = x + iy |-> [[x, y], [-y, x]].
std::vector<CMat> spu_k_generators(int n) {
  const double c = 1.0 / std::sqrt(2.0);
  const CMat Z0(n, n);
  std::vector<CMat> out;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat Y = gen_Y(n, r, s);
      out.push_back(c * four_block(n, Y, Z0, Z0, Y));
    }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat X = gen_X(n, r, s);
      out.push_back(c * four_block(n, Z0, X, -X, Z0));
    }
  for (int t = 1; t <= n; ++t) {
    const CMat D = gen_D(n, t);
    out.push_back(c * four_block(n, Z0, D, -D, Z0));
  }
  return out;
}

// so(2n) = u(n) + p with p spanned by Y^a, Y^b.
std::vector<CMat> sou_p_generators(int n) {
  const double c = 1.0 / std::sqrt(2.0);
  const CMat Z0(n, n);
  std::vector<CMat> out;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat Y = gen_Y(n, r, s);
      out.push_back(c * four_block(n, Y, Z0, Z0, -Y));  // Y^a
    }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat Y = gen_Y(n, r, s);
      out.push_back(c * four_block(n, Z0, Y, Y, Z0));  // Y^b
    }
  return out;
}

// u(n) embedded in so(2n) via z = x + iy |-> [[x, -y], [y, x]].
std::vector<CMat> sou_k_generators(int n) {
  const double c = 1.0 / std::sqrt(2.0);
  const CMat Z0(n, n);
  std::vector<CMat> out;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat Y = gen_Y(n, r, s);
      out.push_back(c * four_block(n, Y, Z0, Z0, Y));
    }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat X = gen_X(n, r, s);
      out.push_back(c * four_block(n, Z0, -X, X, Z0));
    }
  for (int t = 1; t <= n; ++t) {
    const CMat D = gen_D(n, t);
    out.push_back(c * four_block(n, Z0, -D, D, Z0));
  }
  return out;
}

// su(2n) = sp(n) + p; the generating set carries one linear dependency among
// the D^a_rs diagonals, removed by the rank-revealing orthonormalization.
std::vector<CMat> susp_p_generators(int n) {
  const CMat Z0(n, n);
  std::vector<CMat> out;
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat Y = gen_Y(n, r, s);
      out.push_back(0.5 * four_block(n, Y, Z0, Z0, -Y));  // Y^a
    }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat iX = kI * gen_X(n, r, s);
      out.push_back(0.5 * four_block(n, iX, Z0, Z0, iX));  // X^a
    }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat Y = gen_Y(n, r, s);
      out.push_back(0.5 * four_block(n, Z0, Y, Y, Z0));  // Y^b
    }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat iY = kI * gen_Y(n, r, s);
      out.push_back(0.5 * four_block(n, Z0, iY, -iY, Z0));  // Y^c
    }
  for (int r = 1; r <= n; ++r)
    for (int s = r + 1; s <= n; ++s) {
      const CMat iDrs = kI * gen_Drs(n, r, s);
      out.push_back(0.5 * four_block(n, iDrs, Z0, Z0, iDrs));  // D^a
    }
  return out;
}

// sp(n) embedded in su(2n): [[Z, W], [-conj W, conj Z]] |-> [[Z, -conj W], [W, conj Z]].
std::vector<CMat> susp_k_generators(int n) {
  std::vector<CMat> out;
  const AlgebraBasis sp = algebra_basis(GroupSpec::Sp(n));
  for (const CMat& M : sp.elements) {
    const CMat Z = M.block(0, 0, n, n);
    const CMat W = M.block(0, n, n, n);
    out.push_back(four_block(n, Z, -W.conj(), W, Z.conj()));
  }
  return out;
}

}  // namespace

std::string space_name(SpaceId id) {
  switch (id) {
    case SpaceId::SUSO:
      return "suso";
    case SpaceId::SPU:
      return "spu";
    case SpaceId::SOU:
      return "sou";
    case SpaceId::SUSP:
      return "susp";
  }
  return "?";
}

SpaceId space_from_string(const std::string& s) {
  if (s == "suso") return SpaceId::SUSO;
  if (s == "spu") return SpaceId::SPU;
  if (s == "sou") return SpaceId::SOU;
  if (s == "susp") return SpaceId::SUSP;
  throw std::invalid_argument("unknown space '" + s + "' (expected suso|spu|sou|susp)");
}

int SymmetricSpaceModel::expected_p_dim() const {
  switch (id) {
    case SpaceId::SUSO:
      return (n - 1) * (n + 2) / 2;
    case SpaceId::SPU:
      return n * (n + 1);
    case SpaceId::SOU:
      return n * (n - 1);
    case SpaceId::SUSP:
      return (n - 1) * (2 * n + 1);
  }
  return 0;
}

SymmetricSpaceModel symmetric_space(SpaceId id, int n) {
  const int min_n = (id == SpaceId::SPU) ? 1 : 2;
  if (n < min_n) {
    throw std::invalid_argument("symmetric_space: " + space_name(id) + " requires n >= " +
                                std::to_string(min_n));
  }

  SymmetricSpaceModel model;
  model.id = id;
  model.n = n;
  switch (id) {
    case SpaceId::SUSO:
      model.G = GroupSpec::SU(n);
      model.K = GroupSpec::SO(n);
      model.p_basis = orthonormalize_basis(suso_p_generators(n), "p[su/so]");
      model.k_basis = algebra_basis(GroupSpec::SO(n));
      model.embed_K = [n](const CMat& k) {
        const double res = membership_residual(GroupSpec::SO(n), k);
        if (res > 1e-10) {
          throw std::invalid_argument("embed_K: SO membership residual " + std::to_string(res));
        }
        return k;
      };
      break;
    case SpaceId::SPU:
      model.G = GroupSpec::Sp(n);
      model.K = GroupSpec::U(n);
      model.p_basis = orthonormalize_basis(spu_p_generators(n), "p[sp/u]");
      model.k_basis = orthonormalize_basis(spu_k_generators(n), "k[u in sp]");
      model.embed_K = [](const CMat& z) { return embed_U_in_Sp2n(z); };
      break;
    case SpaceId::SOU:
      model.G = GroupSpec::SO(2 * n);
      model.K = GroupSpec::U(n);
      model.p_basis = orthonormalize_basis(sou_p_generators(n), "p[so/u]");
      model.k_basis = orthonormalize_basis(sou_k_generators(n), "k[u in so]");
      model.embed_K = [](const CMat& z) { return embed_U_in_SO2n(z); };
      break;
    case SpaceId::SUSP:
      model.G = GroupSpec::SU(2 * n);
      model.K = GroupSpec::Sp(n);
      model.p_basis = orthonormalize_basis(susp_p_generators(n), "p[su/sp]");
      model.k_basis = orthonormalize_basis(susp_k_generators(n), "k[sp in su]");
      model.embed_K = [](const CMat& q) { return embed_Sp_in_SU2n(q); };
      break;
  }

  const int dim_g = model.G.algebra_dim();
  if (model.p_basis.size() != model.expected_p_dim() ||
      model.p_basis.size() + model.k_basis.size() != dim_g) {
    throw std::runtime_error("symmetric_space: dimension bookkeeping failed for " +
                             space_name(id) + " n=" + std::to_string(n));
  }
  double worst = 0.0;
  for (const CMat& p : model.p_basis.elements)
    for (const CMat& k : model.k_basis.elements) worst = std::max(worst, std::abs(inner(p, k)));
  if (worst > 1e-12) {
    throw std::runtime_error("symmetric_space: p not orthogonal to k, max |inner| = " +
                             std::to_string(worst));
  }
  return model;
}

CMat random_embedded_K(const SymmetricSpaceModel& model, std::uint64_t seed) {
  return model.embed_K(random_element(model.K, seed));
}

}  // namespace eigenmin
