#ifndef DUNKL_PARALLEL_HPP
#define DUNKL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace dunkl {

/// Thread budget: min(DUNKL_THREADS env var, hardware concurrency).
/// DUNKL_THREADS=1 forces serial execution.
int thread_count();

/// Runs fn(i) for i in [0, n) on a static partition of the index range.
/// Each index is owned by exactly one worker, so writes into preallocated
/// per-index slots are race-free and the result does not depend on the
/// number of threads. Reductions must be done by the caller afterwards in
/// a fixed order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace dunkl

#endif
