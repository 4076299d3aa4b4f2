#pragma once

#include <cstddef>
#include <functional>

namespace noncomm {

/// Worker cap from NONCOMM_THREADS, falling back to the hardware concurrency.
/// Read on every call so tests can change it between runs.
unsigned worker_count();

/// Runs body(i) for i in [0, n) split into contiguous chunks across workers.
/// Each index is visited exactly once, so writes to per-index slots give
/// results independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace noncomm
