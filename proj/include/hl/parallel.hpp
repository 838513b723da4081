#pragma once

#include <cstdint>
#include <functional>

namespace hl {

// Global worker cap for parallel loops.  0 means hardware concurrency.
void set_thread_cap(int cap);
int thread_cap();

// Runs body(i) for i in [0, n).  Work items must be independent; outputs
// should be written to per-index slots so the result is identical for any
// worker count.  Exceptions propagate (first one wins).
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

}  // namespace hl
