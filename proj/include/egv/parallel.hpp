#pragma once

#include <cstddef>
#include <vector>

namespace egv {

// Every parallel kernel in this library is a map over independent indices:
// the parallel path fills the same per-index slots as the serial path and
// all reductions happen afterwards, serially, in index order. Results are
// therefore bitwise identical between the two policies (and across thread
// counts), which the tests assert.
enum class ExecPolicy { Serial, Parallel };

void set_max_threads(int n);  // clamps to >= 1; no-op without OpenMP
int max_threads();

namespace detail {
void parallel_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t));
}

template <typename Fn>
void for_each_index(ExecPolicy policy, std::size_t n, Fn&& fn) {
  if (policy == ExecPolicy::Parallel) {
    detail::parallel_for_impl(n, &fn, [](void* ctx, std::size_t i) {
      (*static_cast<Fn*>(ctx))(i);
    });
  } else {
    for (std::size_t i = 0; i < n; ++i) fn(i);
  }
}

// map into a preallocated vector; reduction is left to the caller
template <typename T, typename Fn>
std::vector<T> map_index(ExecPolicy policy, std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  for_each_index(policy, n, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace egv
