#pragma once

#include <cstddef>
#include <functional>

namespace polytrope {

// requested > 0 wins; otherwise POLYTROPE_THREADS; otherwise 1.
int resolve_threads(int requested);

// Calls fn(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace polytrope
