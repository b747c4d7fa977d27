#pragma once

#include <cstddef>
#include <functional>

namespace wfrac {

/// Worker count for internal loops: WFRAC_THREADS if set and positive, otherwise
/// the hardware concurrency (0 in the variable also means "auto").
std::size_t worker_count();

/// Runs body(i) for i in [0, n). Iterations must be independent; each index is
/// executed exactly once. The first exception thrown by any iteration is rethrown
/// on the calling thread after all workers have stopped. Calls made from inside a
/// running loop execute serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace wfrac
