#pragma once

#include <functional>

namespace pelk {

/// Worker cap: min(PELK_THREADS, hardware concurrency); 1 disables
/// threading. Re-read from the environment on every call.
int max_threads();

/// Runs fn(0) .. fn(n-1) across up to max_threads() workers. Indices are
/// independent units (one channel each in the conv kernels), so results do
/// not depend on the worker count.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace pelk
