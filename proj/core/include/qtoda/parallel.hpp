#pragma once

#include <cstddef>
#include <functional>

namespace qtoda {

// Worker count: QTODA_THREADS when set (clamped to >= 1), otherwise the
// hardware concurrency.
int thread_budget();

// Runs f(0..n-1) across the thread budget.  Each index owns its output slot,
// so results are position-deterministic regardless of scheduling; callers do
// any order-sensitive reduction serially afterwards.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace qtoda
