#pragma once

#include <cstddef>
#include <functional>

namespace szegolab {

/// Worker cap: SZEGOLAB_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_cap();

/// Runs body(i) for i in [0, count), split into contiguous chunks over at most
/// thread_cap() threads. Callers write results by index, so the outcome does
/// not depend on the partitioning.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace szegolab
