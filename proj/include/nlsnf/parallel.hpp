#pragma once

#include <cstddef>
#include <functional>

namespace nlsnf {

// Worker count: NLS_NF_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. The first
// exception thrown by a body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace nlsnf
