// parallel.hpp — slot-parallel loops over independent work items
#pragma once

#include <functional>

namespace slgen {

// Global worker count, default 1. The CLI seeds it from SLGEN_THREADS.
void set_thread_count(int n);
int thread_count();

// Runs fn(0..count-1); each index must write only its own slot, so results
// do not depend on the schedule.
void parallel_for(long count, const std::function<void(long)>& fn);

} // namespace slgen
