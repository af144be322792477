#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rieszcheck {

/// Sets the worker count used by parallel_for (no-op without OpenMP).
void set_thread_count(int threads);
int thread_count();

/// Runs body(i) for i in [0, count). Each index must write only its own
/// output slot; results are then independent of the thread count.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const auto n = static_cast<std::int64_t>(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::int64_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace rieszcheck
