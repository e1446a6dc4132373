#pragma once

#include <cstddef>
#include <functional>

namespace toa {

/// Worker count: hardware concurrency, capped by the TOA_THREADS
/// environment variable when it holds a positive integer.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index
/// runs exactly once; the first exception thrown is rethrown after all
/// workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace toa
