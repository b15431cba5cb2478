#pragma once

#include <functional>

namespace contracta {

// Worker count: CONTRACTA_THREADS when set (clamped to [1, 256]), else the
// hardware concurrency.
int thread_budget();

// Runs fn(i) for every i in [0, n). Spawns workers only when the budget and n
// allow; callers keep determinism by writing results into per-index slots.
// The first exception thrown by any worker is rethrown after the join.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace contracta
