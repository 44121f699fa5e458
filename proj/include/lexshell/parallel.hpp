#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lexshell {

/// Worker count the harness defaults to.
inline int default_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Applies fn(i) for i in [0, n).  jobs <= 1 runs the plain serial loop,
/// which doubles as the reference path for output-equality tests; anything
/// larger fans out with OpenMP.  Callers keep results deterministic by
/// writing to preallocated per-index slots and reducing in index order.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    fn(static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

}  // namespace lexshell
