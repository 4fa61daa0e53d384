#include "eigenmin/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eigenmin::par {

Mode default_mode() {
#ifdef _OPENMP
  return Mode::openmp;
#else
  return Mode::serial;
#endif
}

int thread_count() {
  if (const char* env = std::getenv("EIGENMIN_THREADS")) {
    const int k = std::atoi(env);
    if (k > 0) return k;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

void run_openmp(std::size_t n, void (*trampoline)(void*, std::size_t), void* ctx) {
#ifdef _OPENMP
  const int threads = thread_count();
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    trampoline(ctx, static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < n; ++i) trampoline(ctx, i);
#endif
}

}  // namespace detail

}  // namespace eigenmin::par
