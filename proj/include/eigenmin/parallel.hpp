#pragma once

#include <cstddef>

namespace eigenmin::par {

/// Execution mode for the sample sweeps. Every parallel loop in this project
/// writes task i's result into slot i and reduces serially afterwards, so the
/// two modes produce bit-identical output; the serial path is kept as the
/// reference implementation for tests and the benchmark.
enum class Mode { serial, openmp };

/// openmp when compiled with it, serial otherwise.
Mode default_mode();

/// Worker count for openmp loops: EIGENMIN_THREADS when set and positive,
/// otherwise the OpenMP default.
int thread_count();

namespace detail {
void run_openmp(std::size_t n, void (*trampoline)(void*, std::size_t), void* ctx);
}

template <typename F>
void for_each(std::size_t n, F&& body, Mode mode = default_mode()) {
  if (mode == Mode::openmp) {
    auto trampoline = [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); };
    detail::run_openmp(n, trampoline, &body);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace eigenmin::par
