#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace isoclass {

inline int normalize_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

// Joins its threads and rethrows the first exception a worker captured, so an
// error inside a worker surfaces on the calling thread instead of terminating.
class WorkerPool {
public:
    template <class Body>
    void spawn(Body body) {
        pool_.emplace_back([this, body]() mutable {
            try {
                body();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mtx_);
                if (!first_error_) first_error_ = std::current_exception();
            }
        });
    }

    void join_and_rethrow() {
        for (auto& t : pool_) t.join();
        if (first_error_) std::rethrow_exception(first_error_);
    }

private:
    std::vector<std::thread> pool_;
    std::mutex mtx_;
    std::exception_ptr first_error_;
};

}  // namespace detail

// Splits [0, total) into one contiguous block per worker; fn(begin, end, worker)
// runs on its own thread. Workers must write to disjoint state so the result is
// independent of scheduling.
template <class Fn>
void parallel_blocks(long long total, int jobs, Fn fn) {
    jobs = normalize_jobs(jobs);
    if (total <= 0) return;
    if (jobs == 1 || total == 1) {
        fn(0LL, total, 0);
        return;
    }
    if (jobs > total) jobs = static_cast<int>(total);
    detail::WorkerPool pool;
    const long long chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        const long long begin = w * chunk;
        const long long end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.spawn([&fn, begin, end, w] { fn(begin, end, w); });
    }
    pool.join_and_rethrow();
}

// Work-stealing loop over [0, total) for tasks of uneven cost; fn(i) must only
// touch state owned by index i.
template <class Fn>
void parallel_for_index(long long total, int jobs, Fn fn) {
    jobs = normalize_jobs(jobs);
    if (total <= 0) return;
    if (jobs == 1) {
        for (long long i = 0; i < total; ++i) fn(i);
        return;
    }
    std::atomic<long long> next{0};
    std::atomic<bool> abort{false};
    auto worker = [&] {
        for (;;) {
            if (abort.load(std::memory_order_relaxed)) return;
            const long long i = next.fetch_add(1);
            if (i >= total) return;
            try {
                fn(i);
            } catch (...) {
                abort.store(true, std::memory_order_relaxed);
                throw;
            }
        }
    };
    detail::WorkerPool pool;
    const int n = static_cast<int>(std::min<long long>(jobs, total));
    for (int w = 0; w < n; ++w) pool.spawn(worker);
    pool.join_and_rethrow();
}

}  // namespace isoclass
