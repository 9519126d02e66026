#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace lapspec {

/// Effective worker count: `requested` if positive, otherwise hardware
/// concurrency, in both cases capped by the LAPSPEC_THREADS environment
/// variable when it is set.
int thread_budget(int requested = 0);

/// Run fn(i) for i in [0, count) on up to `threads` workers. Work items must
/// be independent; exceptions are captured and the first one is rethrown
/// after all workers finish.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn,
                  int threads = 0);

} // namespace lapspec
