#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kummerlab {

/// Number of worker threads used when jobs <= 0 (auto).
inline int default_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Evaluates fn(i) for i in [0, n) into a vector, index-ordered.
///
/// Each slot is computed independently and written to its own index, so the
/// result is bit-identical for every jobs value; reductions over the result
/// must then run in index order to stay deterministic.
template <typename T, typename Fn>
std::vector<T> ensemble_map(std::size_t n, Fn&& fn, int jobs) {
  std::vector<T> out(n);
  if (jobs <= 0) jobs = default_jobs();
#ifdef _OPENMP
  if (jobs > 1) {
#pragma omp parallel for schedule(static) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

/// Serial reference for ensemble_map; kept for tests and benchmarks.
template <typename T, typename Fn>
std::vector<T> ensemble_map_serial(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

}  // namespace kummerlab
