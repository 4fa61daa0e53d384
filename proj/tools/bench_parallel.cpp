// Serial vs OpenMP timings for the three sample-parallel kernels: the eigen
// identity sweep, the fiber projection batch and the whole-group margin scan.
// Both paths produce bit-identical numbers; this only measures the speedup.

#include <chrono>
#include <cstdio>

#include "eigenmin/verification.hpp"

using namespace eigenmin;

namespace {

template <typename F>
double time_best_of(int reps, F&& work) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    work();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

void row(const char* name, double serial_s, double openmp_s) {
  std::printf("%-24s %10.3f ms %10.3f ms   speedup %.2fx\n", name, serial_s * 1e3, openmp_s * 1e3,
              serial_s / openmp_s);
}

}  // namespace

int main() {
  const std::uint64_t seed = 2024;
  const SymmetricSpaceModel model = symmetric_space(SpaceId::SUSP, 3);
  const FamilyParams params = normalized(sample_parameters(SpaceId::SUSP, 3, seed));
  const EigenFamily fam = make_family(SpaceId::SUSP, 3, params.a, params.b);

  std::printf("space %s n=%d, dim p = %d, threads = %d\n", space_name(model.id).c_str(), model.n,
              model.p_basis.size(), par::thread_count());

  const double cert_serial = time_best_of(3, [&] {
    certify_eigen(model, 5, 40, seed, Backend::exact, par::Mode::serial);
  });
  const double cert_openmp = time_best_of(3, [&] {
    certify_eigen(model, 5, 40, seed, Backend::exact, par::Mode::openmp);
  });
  row("certify_eigen 5x40", cert_serial, cert_openmp);

  const double proj_serial = time_best_of(3, [&] {
    certify_fiber(fam, model, 0, 60, 0, 0, seed, par::Mode::serial);
  });
  const double proj_openmp = time_best_of(3, [&] {
    certify_fiber(fam, model, 0, 60, 0, 0, seed, par::Mode::openmp);
  });
  row("project batch 60", proj_serial, proj_openmp);

  const double scan_serial = time_best_of(3, [&] {
    critical_point_scan(fam, model, 500, seed, par::Mode::serial);
  });
  const double scan_openmp = time_best_of(3, [&] {
    critical_point_scan(fam, model, 500, seed, par::Mode::openmp);
  });
  row("margin scan 500", scan_serial, scan_openmp);

  return 0;
}
