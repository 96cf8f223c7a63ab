#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccbo {

// Row-partitioned parallel loop. Each index is processed by exactly one
// thread with a serial inner body, so results are bitwise independent of the
// thread count. Nested invocations (e.g. inside a parallel harness cell)
// degrade to the serial path because OpenMP nesting is left disabled.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    fn(static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ccbo
