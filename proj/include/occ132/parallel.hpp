#pragma once

#include <cstddef>
#include <functional>

namespace occ132 {

/// OCC132_THREADS if set and positive, else the hardware concurrency (>= 1).
int default_thread_count();

/// Resolves a requested thread count: values <= 0 mean the default.
int resolve_threads(int requested);

/// Runs task(worker, index) for index in [0, count) on `threads` workers.
/// Indices are handed out dynamically; the caller keeps per-worker state
/// indexed by `worker` and merges it after the call returns. The first
/// exception thrown by any task is rethrown here.
void parallel_for(std::size_t count, int threads, const std::function<void(int worker, std::size_t index)>& task);

}  // namespace occ132
