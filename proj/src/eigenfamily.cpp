#include "eigenmin/eigenfamily.hpp"

#include <cmath>
#include <fstream>

#include "eigenmin/generators.hpp"
#include "eigenmin/rng.hpp"

#include <json.hpp>

namespace eigenmin {

namespace {

const Complex kI(0.0, 1.0);

CMat outer_symmetric(const CVec& a) {
  const int d = static_cast<int>(a.size());
  CMat A(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A(i, j) = a[i] * a[j];
  return A;
}

CMat outer_skew(const CVec& a, const CVec& b) {
  const int d = static_cast<int>(a.size());
  const double c = 1.0 / std::sqrt(2.0);
  CMat A(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) A(i, j) = c * (a[i] * b[j] - b[i] * a[j]);
  return A;
}

/// Hermitian 2x2 Gram determinant of {a, b}; zero iff linearly dependent.
double indep_gram_det(const CVec& a, const CVec& b) {
  Complex ab = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) ab += a[k] * std::conj(b[k]);
  const double na2 = hnorm(a) * hnorm(a);
  const double nb2 = hnorm(b) * hnorm(b);
  return na2 * nb2 - std::norm(ab);
}

GroupSpec group_of(SpaceId id, int n) {
  switch (id) {
    case SpaceId::SUSO:
      return GroupSpec::SU(n);
    case SpaceId::SPU:
      return GroupSpec::Sp(n);
    case SpaceId::SOU:
      return GroupSpec::SO(2 * n);
    case SpaceId::SUSP:
      return GroupSpec::SU(2 * n);
  }
  throw std::invalid_argument("group_of: bad space");
}

}  // namespace

int EigenFamily::ambient_dim() const { return group_of(space, n).ambient_dim(); }

std::pair<double, double> expected_eigenvalues(SpaceId id, int n) {
  const double dn = n;
  switch (id) {
    case SpaceId::SUSO:
      return {-2.0 * (dn * dn + dn - 2.0) / dn, -4.0 * (dn - 1.0) / dn};
    case SpaceId::SPU:
      return {-2.0 * (dn + 1.0), -2.0};
    case SpaceId::SOU:
      return {-2.0 * (dn - 1.0), -1.0};
    case SpaceId::SUSP:
      return {-2.0 * (2.0 * dn * dn - dn - 1.0) / dn, -2.0 * (dn - 1.0) / dn};
  }
  throw std::invalid_argument("expected_eigenvalues: bad space");
}

EigenFamily make_family(SpaceId id, int n, CVec a, CVec b, SOUMode mode) {
  const int min_n = (id == SpaceId::SPU) ? 1 : 2;
  if (n < min_n) {
    throw std::invalid_argument("make_family: " + space_name(id) + " requires n >= " +
                                std::to_string(min_n));
  }
  const std::size_t want = (id == SpaceId::SUSO) ? static_cast<std::size_t>(n)
                                                 : static_cast<std::size_t>(2 * n);
  if (a.size() != want) {
    throw std::invalid_argument("make_family: parameter a must have length " +
                                std::to_string(want));
  }
  const double na = hnorm(a);
  if (na == 0.0) throw std::invalid_argument("make_family: a must be non-zero");

  EigenFamily fam;
  fam.space = id;
  fam.n = n;
  const auto [lambda, mu] = expected_eigenvalues(id, n);
  fam.lambda = lambda;
  fam.mu = mu;

  if (id == SpaceId::SUSO || id == SpaceId::SPU) {
    if (!b.empty()) {
      throw std::invalid_argument("make_family: " + space_name(id) + " takes no parameter b");
    }
    fam.a = std::move(a);
    fam.A = outer_symmetric(fam.a);
    return fam;
  }

  if (b.size() != want) {
    throw std::invalid_argument("make_family: parameter b must have length " +
                                std::to_string(want));
  }
  const double nb = hnorm(b);
  if (nb == 0.0) throw std::invalid_argument("make_family: b must be non-zero");
  const double scale2 = na * nb;

  if (indep_gram_det(a, b) <= 1e-10 * scale2 * scale2) {
    throw std::invalid_argument("make_family: a and b must be linearly independent");
  }

  if (id == SpaceId::SOU) {
    if (mode == SOUMode::strict) {
      double im_b = 0.0;
      for (const auto& v : b) im_b = std::max(im_b, std::abs(v.imag()));
      if (im_b > 1e-12 * (1.0 + nb)) {
        throw std::invalid_argument("make_family: SOU strict mode needs real b, max |Im b_k| = " +
                                    std::to_string(im_b));
      }
      const double aa = std::abs(bilinear_pair(a, a));
      if (aa > 1e-10 * na * na) {
        throw std::invalid_argument("make_family: SOU strict mode violated, |(a,a)| = " +
                                    std::to_string(aa) + " > tol");
      }
      const double ab = std::abs(bilinear_pair(a, b));
      if (ab > 1e-10 * scale2) {
        throw std::invalid_argument("make_family: SOU strict mode violated, |(a,b)| = " +
                                    std::to_string(ab) + " > tol");
      }
    } else {
      const Complex q = bilinear_pair(a, a) * bilinear_pair(b, b) -
                        bilinear_pair(a, b) * bilinear_pair(a, b);
      if (std::abs(q) > 1e-10 * scale2 * scale2) {
        throw std::invalid_argument(
            "make_family: SOU quadric mode violated, |(a,a)(b,b)-(a,b)^2| = " +
            std::to_string(std::abs(q)) + " > tol");
      }
    }
  }

  fam.a = std::move(a);
  fam.b = std::move(b);
  fam.A = outer_skew(fam.a, fam.b);
  return fam;
}

Complex evaluate(const EigenFamily& fam, const CMat& p) {
  const GroupSpec G = group_of(fam.space, fam.n);
  const double res = membership_residual(G, p);
  if (res > 1e-6) {
    throw std::invalid_argument("evaluate: point fails " + G.name() +
                                " membership, residual " + std::to_string(res));
  }
  if (fam.uses_J()) {
    return (fam.A * p * gen_J(fam.n) * p.transpose()).trace();
  }
  return (fam.A * p * p.transpose()).trace();
}

ScalarField lift_field(const EigenFamily& fam) {
  ScalarField f;
  const CMat A = fam.A;
  if (fam.uses_J()) {
    const CMat J = gen_J(fam.n);
    f.evaluate = [A, J](const CMat& p) { return (A * p * J * p.transpose()).trace(); };
    f.exact_d1 = [A, J](const CMat& p, const CMat& Z) {
      const CMat Zt = Z.transpose();
      return (A * p * (Z * J + J * Zt) * p.transpose()).trace();
    };
    f.exact_d2 = [A, J](const CMat& p, const CMat& Z) {
      const CMat Zt = Z.transpose();
      return (A * p * (Z * Z * J + 2.0 * (Z * J * Zt) + J * Zt * Zt) * p.transpose()).trace();
    };
  } else {
    f.evaluate = [A](const CMat& p) { return (A * p * p.transpose()).trace(); };
    f.exact_d1 = [A](const CMat& p, const CMat& Z) {
      return (A * p * (Z + Z.transpose()) * p.transpose()).trace();
    };
    f.exact_d2 = [A](const CMat& p, const CMat& Z) {
      const CMat Zt = Z.transpose();
      return (A * p * (Z * Z + 2.0 * (Z * Zt) + Zt * Zt) * p.transpose()).trace();
    };
  }
  return f;
}

FamilyParams sample_parameters(SpaceId id, int n, std::uint64_t seed) {
  Rng rng(seed);
  const int d = (id == SpaceId::SUSO) ? n : 2 * n;

  const auto draw_complex = [&](int len) {
    CVec v(len);
    for (auto& x : v) x = rng.cgaussian();
    return v;
  };

  FamilyParams out;
  switch (id) {
    case SpaceId::SUSO:
    case SpaceId::SPU: {
      do {
        out.a = draw_complex(d);
      } while (hnorm(out.a) < 1e-6);
      return out;
    }
    case SpaceId::SOU: {
      // Orthonormal real triple (u, v, b); a = u + iv is isotropic with
      // (a,b) = 0 by construction.
      for (;;) {
        std::vector<RVec> w(3, RVec(d));
        for (auto& col : w)
          for (auto& x : col) x = rng.gaussian();
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          for (int k = 0; k < i; ++k) {
            const double c = rdot(w[i], w[k]);
            for (int t = 0; t < d; ++t) w[i][t] -= c * w[k][t];
          }
          // second pass for orthogonality at machine level
          for (int k = 0; k < i; ++k) {
            const double c = rdot(w[i], w[k]);
            for (int t = 0; t < d; ++t) w[i][t] -= c * w[k][t];
          }
          const double nw = rnorm(w[i]);
          if (nw < 1e-6) {
            ok = false;
            break;
          }
          for (auto& x : w[i]) x /= nw;
        }
        if (!ok) continue;
        out.a.resize(d);
        out.b.resize(d);
        for (int t = 0; t < d; ++t) {
          out.a[t] = Complex(w[0][t], w[1][t]);
          out.b[t] = Complex(w[2][t], 0.0);
        }
        return out;
      }
    }
    case SpaceId::SUSP: {
      for (;;) {
        out.a = draw_complex(d);
        out.b = draw_complex(d);
        const double s = hnorm(out.a) * hnorm(out.b);
        if (s > 1e-6 && indep_gram_det(out.a, out.b) > 1e-6 * s * s) return out;
      }
    }
  }
  throw std::invalid_argument("sample_parameters: bad space");
}

FamilyParams normalized(const FamilyParams& params) {
  FamilyParams out = params;
  const double na = hnorm(out.a);
  if (na > 0.0)
    for (auto& x : out.a) x /= na;
  if (!out.b.empty()) {
    const double nb = hnorm(out.b);
    if (nb > 0.0)
      for (auto& x : out.b) x /= nb;
  }
  return out;
}

EigenFamily family_from_json_file(const std::string& path, SOUMode mode) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("family_from_json_file: cannot open " + path);
  nlohmann::json j;
  in >> j;

  const SpaceId id = space_from_string(j.at("space").get<std::string>());
  const int n = j.at("n").get<int>();

  const auto read_vec = [&](const char* re_key, const char* im_key, bool required) -> CVec {
    if (!j.contains(re_key)) {
      if (required) throw std::invalid_argument(std::string("missing field ") + re_key);
      return {};
    }
    const auto re = j.at(re_key).get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (j.contains(im_key)) {
      im = j.at(im_key).get<std::vector<double>>();
      if (im.size() != re.size()) {
        throw std::invalid_argument("family_from_json_file: re/im length mismatch");
      }
    }
    CVec v(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) v[k] = Complex(re[k], im[k]);
    return v;
  };

  CVec a = read_vec("a_re", "a_im", true);
  CVec b = read_vec("b_re", "b_im", false);
  return make_family(id, n, std::move(a), std::move(b), mode);
}

}  // namespace eigenmin
