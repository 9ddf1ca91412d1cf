#pragma once

#include <cstddef>
#include <functional>

namespace hermlab {

// Worker count: HERMLAB_THREADS if set and positive, else hardware
// concurrency.  Results must be written to caller-owned slots indexed by
// the loop variable so that output never depends on scheduling order.
int worker_count();

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace hermlab
