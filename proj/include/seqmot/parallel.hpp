#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace seqmot {

// Serial is the reference path; Parallel runs the same per-index work under
// OpenMP. Results must be written by index so both modes are bit-identical.
enum class ExecMode { Serial, Parallel };

template <typename Fn>
void parallel_for(std::size_t count, ExecMode mode, Fn&& fn) {
  if (mode == ExecMode::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    fn(static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < count; ++i) fn(i);
#endif
}

inline int hardware_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace seqmot
