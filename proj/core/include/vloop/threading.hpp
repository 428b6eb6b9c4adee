#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace vloop {

// Fork-join helper for per-frame work. Tasks must write disjoint outputs;
// the pool never reorders observable results, so runs stay deterministic
// for any thread count.
class ThreadPool {
public:
    // thread_count <= 1 runs everything on the calling thread.
    explicit ThreadPool(int thread_count);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    int thread_count() const { return static_cast<int>(workers_.size()) + 1; }

    // Runs task(i) for every i in [0, n); returns once all completed.
    void run_indexed(int n, std::function<void(int)> task);

    // Splits [0, n) into roughly equal contiguous chunks, one per thread.
    void run_chunked(int n, const std::function<void(int, int)>& task);

    // Worker count from VLOOP_THREADS (0 or unset = auto).
    static int resolve_thread_count();

private:
    struct Job {
        std::function<void(int)> fn;
        int n = 0;
        std::atomic<int> next{0};
        std::atomic<int> completed{0};
        std::mutex m;
        std::condition_variable done;
    };

    void worker_loop();
    static void execute(Job& job);

    std::mutex m_;
    std::condition_variable cv_;
    std::shared_ptr<Job> job_;
    std::uint64_t generation_ = 0;
    bool stop_ = false;
    std::vector<std::thread> workers_;
};

}  // namespace vloop
