#pragma once

#include <cstddef>
#include <functional>

namespace workbench {

/// Worker count for inner sweeps. Honors WORKBENCH_THREADS when set to a
/// positive integer, otherwise the hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(i) for i in [0, n). Iterations are split into contiguous
/// chunks; each index is visited exactly once, so writing to slot i of a
/// preallocated output keeps results independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace workbench
