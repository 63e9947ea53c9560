#pragma once

#include <cstddef>
#include <functional>

namespace capbound::detail {

/// Worker threads to use: hardware concurrency, capped by CAPBOUND_THREADS.
unsigned worker_count();

/// Runs body(i) for i in [0, n) over contiguous blocks, one per worker.
/// Each index is visited exactly once; results must not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace capbound::detail
