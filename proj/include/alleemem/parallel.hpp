#pragma once

#include <cstddef>
#include <functional>

namespace alleemem {

// Number of worker threads: ALLEEMEM_THREADS when set (>= 1), else hardware
// concurrency.
int thread_budget();

// Runs fn(i) for i in [0, n) on up to thread_budget() threads. Each index is
// executed exactly once; callers write results into per-index slots so the
// outcome is independent of scheduling. Exceptions propagate to the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace alleemem
