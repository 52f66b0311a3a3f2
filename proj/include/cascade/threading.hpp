#pragma once

#include <cstddef>
#include <functional>

namespace cascade {

unsigned default_thread_count();

// Runs fn(begin, end) over contiguous chunks of [0, n) on `threads` workers.
// Chunk boundaries depend on the thread count, so callers must make per-index
// work independent (disjoint writes, per-row serial reductions) to keep
// results thread-count invariant.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace cascade
