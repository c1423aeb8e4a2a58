#pragma once

#include <cstddef>
#include <functional>

namespace choquet {

// Worker count: CHOQUET_WORKERS if set and positive, otherwise the hardware
// concurrency (at least 1).
unsigned DefaultWorkerCount();

// Runs body(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any body is rethrown after all threads join.
void ParallelFor(std::size_t count, unsigned workers,
                 const std::function<void(std::size_t)>& body);

}  // namespace choquet
