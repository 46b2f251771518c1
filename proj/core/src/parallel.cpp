#include "qcent/parallel.hpp"

#include "qcent/errors.hpp"

namespace qcent {

WorkerPool::WorkerPool(int workers) : workers_(workers) {
    if (workers_ < 1) throw ValidationError("workers", "worker count must be >= 1");
    for (int id = 1; id < workers_; ++id)
        threads_.emplace_back([this, id] { worker_loop(id); });
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard lock(mu_);
        stop_ = true;
    }
    cv_start_.notify_all();
    for (auto& t : threads_) t.join();
}

void WorkerPool::run_blocks(std::size_t count,
                            const std::function<void(int, std::size_t, std::size_t)>& fn) {
    if (count == 0) return;
    if (workers_ == 1) {
        fn(0, 0, count);
        return;
    }
    {
        std::lock_guard lock(mu_);
        task_ = &fn;
        task_count_ = count;
        pending_ = workers_ - 1;
        ++generation_;
    }
    cv_start_.notify_all();

    const auto [lo, hi] = block_range(count, workers_, 0);
    fn(0, lo, hi);

    std::unique_lock lock(mu_);
    cv_done_.wait(lock, [this] { return pending_ == 0; });
    task_ = nullptr;
}

void WorkerPool::worker_loop(int id) {
    std::uint64_t seen = 0;
    for (;;) {
        const std::function<void(int, std::size_t, std::size_t)>* task;
        std::size_t count;
        {
            std::unique_lock lock(mu_);
            cv_start_.wait(lock, [&] { return stop_ || generation_ != seen; });
            if (stop_) return;
            seen = generation_;
            task = task_;
            count = task_count_;
        }
        const auto [lo, hi] = block_range(count, workers_, id);
        (*task)(id, lo, hi);
        {
            std::lock_guard lock(mu_);
            if (--pending_ == 0) cv_done_.notify_one();
        }
    }
}

}  // namespace qcent
