#pragma once

#include <cstddef>
#include <functional>

namespace powertour {

/// Worker count: POWERTOUR_THREADS if set and positive, else hardware
/// concurrency (at least 1).
[[nodiscard]] std::size_t thread_count();

/// Calls fn(i) for i in [0, count) on up to thread_count() workers. Results
/// must be written by index; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace powertour
