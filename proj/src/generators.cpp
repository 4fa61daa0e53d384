#include "eigenmin/generators.hpp"

#include <cmath>

namespace eigenmin {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

CMat gen_E(int n, int i, int j) {
  require(n >= 1 && i >= 1 && j >= 1 && i <= n && j <= n, "gen_E: index out of range");
  CMat m(n, n);
  m(i - 1, j - 1) = 1.0;
  return m;
}

CMat gen_D(int n, int t) { return gen_E(n, t, t); }

CMat gen_X(int n, int r, int s) {
  require(r >= 1 && r < s && s <= n, "gen_X: requires 1 <= r < s <= n");
  CMat m(n, n);
  m(r - 1, s - 1) = kInvSqrt2;
  m(s - 1, r - 1) = kInvSqrt2;
  return m;
}

CMat gen_Y(int n, int r, int s) {
  require(r >= 1 && r < s && s <= n, "gen_Y: requires 1 <= r < s <= n");
  CMat m(n, n);
  m(r - 1, s - 1) = kInvSqrt2;
  m(s - 1, r - 1) = -kInvSqrt2;
  return m;
}

CMat gen_Drs(int n, int r, int s) {
  require(r >= 1 && r < s && s <= n, "gen_Drs: requires 1 <= r < s <= n");
  CMat m(n, n);
  m(r - 1, r - 1) = kInvSqrt2;
  m(s - 1, s - 1) = -kInvSqrt2;
  return m;
}

CMat gen_J(int n) {
  require(n >= 1, "gen_J: n >= 1");
  CMat m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m(i, n + i) = 1.0;
    m(n + i, i) = -1.0;
  }
  return m;
}

CMat generator(const GeneratorId& id) {
  switch (id.kind) {
    case GeneratorId::Kind::E:
      return gen_E(id.size, id.i, id.j);
    case GeneratorId::Kind::D:
      return gen_D(id.size, id.i);
    case GeneratorId::Kind::X:
      return gen_X(id.size, id.i, id.j);
    case GeneratorId::Kind::Y:
      return gen_Y(id.size, id.i, id.j);
    case GeneratorId::Kind::Drs:
      return gen_Drs(id.size, id.i, id.j);
    case GeneratorId::Kind::J:
      return gen_J(id.size);
  }
  throw std::invalid_argument("generator: unknown kind");
}

}  // namespace eigenmin
