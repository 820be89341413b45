#pragma once

#include <cstddef>
#include <functional>

namespace jointslab {

// Worker count for parallel loops: JOINTS_LAB_THREADS if set (minimum 1),
// otherwise the hardware concurrency.
std::size_t worker_count();

// Runs body(0), ..., body(count-1) across worker threads. The body must
// write only to its own slot; results are index-addressed so the schedule
// cannot change any output.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace jointslab
