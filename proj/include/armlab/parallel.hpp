#pragma once

#include <cstdint>
#include <functional>

namespace armlab {

// Global worker budget for parallel loops. Defaults to hardware concurrency.
int thread_budget();
void set_thread_budget(int n);

// Runs fn(begin, end) over [0, total) split into fixed-size chunks handed to a
// worker pool. Chunk boundaries are independent of the thread count, so any
// per-chunk accumulation merged in chunk order is deterministic.
inline constexpr std::uint64_t kParallelChunk = 1u << 14;

void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace armlab
