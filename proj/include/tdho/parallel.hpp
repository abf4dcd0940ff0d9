#pragma once

#include <cstddef>
#include <functional>

namespace tdho {

// Worker count: TDHO_THREADS caps it, hardware concurrency is the default.
int thread_budget();

// Runs fn(i) for i in [0, n) across the thread budget.  Tasks write to
// preallocated slots, so results are independent of scheduling; exceptions
// are collected and the first one rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace tdho
