#pragma once

#include <cstddef>
#include <functional>

namespace spdc {

// Worker count: SPDC_SIM_THREADS when set (>= 1), else hardware concurrency.
unsigned max_threads();

// Static round-robin parallel map over [0, n).  Each index must write only
// its own output slot; results are then independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace spdc
