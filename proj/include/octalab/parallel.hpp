#pragma once

#include <cstddef>

#ifdef OCTALAB_OPENMP
#include <omp.h>
#endif

namespace octalab {

// Parallel loop over [0, n). Every iteration must write to disjoint slots so
// the result is independent of the schedule; jobs <= 1 runs the plain serial
// loop (the reference path used by the kernel equality tests).
template <typename Fn>
void parallel_for(size_t n, int jobs, Fn&& fn) {
#ifdef OCTALAB_OPENMP
  if (jobs > 1) {
#pragma omp parallel for schedule(static) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<size_t>(i));
    return;
  }
#else
  (void)jobs;
#endif
  for (size_t i = 0; i < n; ++i) fn(i);
}

inline int hardware_jobs() {
#ifdef OCTALAB_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Process-wide default used by lazily computed caches (geometry distance
// matrices and the like); the CLI sets it from --jobs.
inline int& default_jobs() {
  static int jobs = 1;
  return jobs;
}

}  // namespace octalab
