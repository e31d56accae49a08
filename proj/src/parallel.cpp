#include "egv/parallel.hpp"

#ifdef EGV_HAVE_OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace egv {

void set_max_threads(int n) {
#ifdef EGV_HAVE_OPENMP
  omp_set_num_threads(std::max(1, n));
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef EGV_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t)) {
#ifdef EGV_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    body(ctx, static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) body(ctx, i);
#endif
}

}  // namespace detail
}  // namespace egv
