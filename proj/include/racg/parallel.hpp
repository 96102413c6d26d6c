#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace racg::par {

/// Runs f(i) for i in [0, n). Iterations must be independent; results are
/// written to disjoint slots by the caller, so output does not depend on
/// scheduling.
template <class F>
void for_each_index(std::size_t n, bool parallel, F&& f) {
#ifdef _OPENMP
  if (parallel && n > 1) {
    const long long ln = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < ln; ++i) f(static_cast<std::size_t>(i));
    return;
  }
#endif
  (void)parallel;
  for (std::size_t i = 0; i < n; ++i) f(i);
}

/// Deterministic parallel sum of f(0..n-1): fixed-size blocks are summed
/// serially, block partials are combined in index order. The result is
/// bitwise independent of the thread count.
template <class F>
double blocked_sum(std::size_t n, bool parallel, F&& f) {
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
  for_each_index(blocks, parallel, [&](std::size_t b) {
    double acc = 0.0;
    const std::size_t end = std::min(n, (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) acc += f(i);
    partial[b] = acc;
  });
  double total = 0.0;
  for (double x : partial) total += x;
  return total;
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace racg::par
