#pragma once

#include <functional>

namespace sphere12 {

/// Worker count: SPHERE12_THREADS if set (clamped to >= 1), else the
/// hardware concurrency.
int worker_count();

/// Runs fn(0..n-1) across the workers. Blocking; fn must be thread-safe.
void parallel_for(long n, const std::function<void(long)>& fn);

}  // namespace sphere12
