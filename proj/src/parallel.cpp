#include "armlab/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace armlab {

namespace {
int g_budget = 0;  // 0 = not set -> hardware concurrency
}

int thread_budget() {
  if (g_budget > 0) return g_budget;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void set_thread_budget(int n) { g_budget = n; }

void parallel_chunks(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t)>& fn) {
  if (total == 0) return;
  std::uint64_t nchunks = (total + kParallelChunk - 1) / kParallelChunk;
  int workers = thread_budget();
  if (workers <= 1 || nchunks <= 1) {
    for (std::uint64_t c = 0; c < nchunks; ++c) {
      std::uint64_t b = c * kParallelChunk;
      fn(b, std::min(total, b + kParallelChunk));
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    for (;;) {
      std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= nchunks) return;
      std::uint64_t b = c * kParallelChunk;
      try {
        fn(b, std::min(total, b + kParallelChunk));
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  int spawn = static_cast<int>(std::min<std::uint64_t>(workers, nchunks));
  pool.reserve(spawn);
  for (int i = 0; i < spawn; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace armlab
