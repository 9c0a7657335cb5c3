#pragma once

#include <cstddef>
#include <functional>

namespace zetagap {

/// Number of worker threads used by the parallel helpers. Zero selects
/// std::thread::hardware_concurrency().
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Runs body(i) for every i in [0, n) across the worker pool. Work is split
/// into contiguous chunks; body must only write to slot i of its outputs so
/// the result does not depend on the partitioning. The first exception thrown
/// by any worker is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace zetagap
