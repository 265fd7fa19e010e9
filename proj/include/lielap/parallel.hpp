#pragma once

#include <cstddef>
#include <functional>

namespace lielap {

/// Worker count: LIE_LAP_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Indices
/// are claimed dynamically; the first exception thrown is rethrown after all
/// workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace lielap
