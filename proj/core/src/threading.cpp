#include "vloop/threading.hpp"

#include <algorithm>
#include <cstdlib>

namespace vloop {

ThreadPool::ThreadPool(int thread_count) {
    const int extra = std::max(0, thread_count - 1);
    workers_.reserve(extra);
    for (int i = 0; i < extra; ++i) {
        workers_.emplace_back([this] { worker_loop(); });
    }
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard<std::mutex> lk(m_);
        stop_ = true;
    }
    cv_.notify_all();
    for (auto& w : workers_) {
        w.join();
    }
}

void ThreadPool::execute(Job& job) {
    int i;
    while ((i = job.next.fetch_add(1, std::memory_order_relaxed)) < job.n) {
        job.fn(i);
        if (job.completed.fetch_add(1, std::memory_order_acq_rel) + 1 == job.n) {
            std::lock_guard<std::mutex> lk(job.m);
            job.done.notify_all();
        }
    }
}

void ThreadPool::run_indexed(int n, std::function<void(int)> task) {
    if (n <= 0) {
        return;
    }
    if (workers_.empty() || n == 1) {
        for (int i = 0; i < n; ++i) {
            task(i);
        }
        return;
    }
    auto job = std::make_shared<Job>();
    job->fn = std::move(task);
    job->n = n;
    {
        std::lock_guard<std::mutex> lk(m_);
        job_ = job;
        ++generation_;
    }
    cv_.notify_all();
    execute(*job);
    {
        std::unique_lock<std::mutex> lk(job->m);
        job->done.wait(lk, [&] { return job->completed.load(std::memory_order_acquire) == job->n; });
    }
    {
        std::lock_guard<std::mutex> lk(m_);
        if (job_ == job) {
            job_.reset();
        }
    }
}

void ThreadPool::run_chunked(int n, const std::function<void(int, int)>& task) {
    if (n <= 0) {
        return;
    }
    const int chunks = std::min(n, thread_count());
    if (chunks <= 1) {
        task(0, n);
        return;
    }
    const int base = n / chunks;
    const int rem = n % chunks;
    run_indexed(chunks, [&](int c) {
        const int begin = c * base + std::min(c, rem);
        const int end = begin + base + (c < rem ? 1 : 0);
        task(begin, end);
    });
}

void ThreadPool::worker_loop() {
    std::uint64_t seen = 0;
    for (;;) {
        std::shared_ptr<Job> job;
        {
            std::unique_lock<std::mutex> lk(m_);
            cv_.wait(lk, [&] { return stop_ || (generation_ != seen && job_ != nullptr); });
            if (stop_) {
                return;
            }
            seen = generation_;
            job = job_;
        }
        execute(*job);
    }
}

int ThreadPool::resolve_thread_count() {
    const char* env = std::getenv("VLOOP_THREADS");
    long requested = 0;  // 0 = auto
    if (env != nullptr && *env != '\0') {
        char* end = nullptr;
        requested = std::strtol(env, &end, 10);
        if (end == env || requested < 0) {
            requested = 0;
        }
    }
    if (requested == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        requested = hw == 0 ? 1 : static_cast<long>(hw);
    }
    return static_cast<int>(std::clamp<long>(requested, 1, 64));
}

}  // namespace vloop
