#pragma once

#include <cstddef>
#include <functional>

namespace kantichain {

/// Worker cap: ANTICHAIN_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls fn(i) for i in [0, count) on up to worker_count() threads. If any call
/// throws, the exception of the lowest failing index is rethrown after all
/// workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace kantichain
