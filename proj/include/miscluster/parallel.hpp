#pragma once

#include <cstddef>
#include <functional>

namespace miscluster {

// Worker count: explicit request if nonzero, else MISCLUSTER_THREADS, else
// hardware concurrency. Never less than 1.
std::size_t resolve_thread_count(std::size_t requested = 0);

// Runs fn(0) .. fn(n-1) across `threads` workers over contiguous index blocks.
// Each index is processed exactly once; callers write results into per-index
// slots, so the outcome is identical for any worker count. The first exception
// thrown by a worker is rethrown after all workers join.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace miscluster
