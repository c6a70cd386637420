#pragma once

#include <cstdlib>

#ifdef POLYLAW_HAVE_OPENMP
#include <omp.h>
#endif

// Deterministic work-sharing for the enumeration drivers. Callers split a
// suite into independent cells, run the body over indices 0..n-1, and merge
// per-cell results in index order, so the output never depends on the
// schedule. POLYLAW_THREADS caps the worker count; the serial flag forces
// the reference single-thread path (used by the benchmark as a baseline).

namespace polylaw::parallel {

inline int worker_count() {
#ifdef POLYLAW_HAVE_OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* s = std::getenv("POLYLAW_THREADS")) {
    int cap = std::atoi(s);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

template <typename F>
void parallel_for(int n, F&& body, bool serial = false) {
#ifdef POLYLAW_HAVE_OPENMP
  if (!serial && worker_count() > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
#endif
  (void)serial;
  for (int i = 0; i < n; ++i) body(i);
}

}  // namespace polylaw::parallel
