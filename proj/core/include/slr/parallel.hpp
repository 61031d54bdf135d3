#pragma once

#include <cstddef>
#include <functional>

namespace slr {

/// Number of worker threads to use: `requested` if nonzero, otherwise
/// hardware concurrency, in both cases capped by the SLR_THREADS
/// environment variable when it is set.
unsigned effective_threads(unsigned requested = 0);

/// Runs fn(i) for i in [0, count). Work items must be independent; callers
/// write results into slot i of a preallocated buffer so that aggregation
/// order (and therefore output) does not depend on the schedule. The first
/// exception thrown by a task is rethrown after all threads join.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace slr
