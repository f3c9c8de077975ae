#pragma once

#include <functional>

namespace patt {

// Worker cap: min(hardware_concurrency, PATT_THREADS if set). Always >= 1.
int worker_count();

// Runs fn(i) for i in [begin, end) across up to `threads` workers.
// Work items must be independent; result ordering is the caller's concern
// (write into preallocated slots indexed by i).
void parallel_for(int64_t begin, int64_t end, int threads,
                  const std::function<void(int64_t)>& fn);

}  // namespace patt
