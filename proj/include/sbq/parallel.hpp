#pragma once

#include <cstddef>
#include <functional>

namespace sbq {

// Worker count from SBQ_THREADS (unset or invalid: hardware concurrency, at least 1).
unsigned thread_count();

// Calls body(i) for i in [0, n). Each index runs exactly once; the first exception thrown
// by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sbq
