#pragma once

#include <cstddef>
#include <functional>

namespace rankone {

/// Worker count: hardware concurrency capped by HC_RANKONE_THREADS.
unsigned worker_count();

/// Calls body(i) for every i in [0, n). Indices are split into contiguous
/// blocks, one per worker; each index is visited exactly once. Callers write
/// results into slot i, so output order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace rankone
