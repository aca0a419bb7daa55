#pragma once

#include <cstddef>
#include <functional>

namespace burgers {

/// Caps the number of worker threads used by library loops (0 = hardware).
void set_max_threads(unsigned count);
unsigned max_threads();

/// Runs body(i) for i in [0, count) across worker threads. Each index is
/// visited exactly once; callers write results into per-index slots so the
/// output never depends on scheduling. The first exception thrown by any
/// worker is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace burgers
