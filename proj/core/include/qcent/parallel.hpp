#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qcent {

// Fixed pool of worker threads executing index ranges split into one
// contiguous block per worker.  Workers only ever run element-wise maps or
// fill private buffers that are merged serially afterwards, so results are
// bit-identical for any worker count.  All floating-point reductions in the
// library run on the calling thread in a fixed order for the same reason.
class WorkerPool {
  public:
    explicit WorkerPool(int workers = 1);
    ~WorkerPool();

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    int workers() const noexcept { return workers_; }

    // Calls fn(block_index, lo, hi) for each of the workers() contiguous
    // blocks covering [0, count).  fn runs concurrently; block 0 on the
    // calling thread.  Returns after all blocks complete.
    void run_blocks(std::size_t count,
                    const std::function<void(int, std::size_t, std::size_t)>& fn);

  private:
    void worker_loop(int id);

    int workers_;
    std::vector<std::thread> threads_;
    std::mutex mu_;
    std::condition_variable cv_start_;
    std::condition_variable cv_done_;
    const std::function<void(int, std::size_t, std::size_t)>* task_ = nullptr;
    std::size_t task_count_ = 0;
    std::uint64_t generation_ = 0;
    int pending_ = 0;
    bool stop_ = false;
};

// Block bounds for worker b of w over [0, count).
inline std::pair<std::size_t, std::size_t> block_range(std::size_t count, int w, int b) {
    const std::size_t lo = count * static_cast<std::size_t>(b) / static_cast<std::size_t>(w);
    const std::size_t hi = count * static_cast<std::size_t>(b + 1) / static_cast<std::size_t>(w);
    return {lo, hi};
}

}  // namespace qcent
