#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace dlab::sweep {

// Worker count: DELANNOY_LAB_JOBS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
long long default_jobs();

// Runs fn(0..count-1) on up to `jobs` threads and returns the results in
// index order. With fail_fast the queue stops issuing work once some result
// satisfies `failed` and the output is truncated just past the lowest failing
// index. Indices are issued in increasing order and in-flight work always
// completes, so everything below the lowest failure is computed and the
// truncated output is identical for any worker count.
template <class R, class Fn, class FailPred>
std::vector<R> run(std::size_t count, long long jobs, bool fail_fast, Fn fn, FailPred failed) {
    std::vector<std::optional<R>> slots(count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex err_mu;
    std::exception_ptr err;

    auto work = [&] {
        while (!stop.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            try {
                R r = fn(i);
                if (fail_fast && failed(r)) stop.store(true, std::memory_order_relaxed);
                slots[i] = std::move(r);
            } catch (...) {
                {
                    std::scoped_lock lk(err_mu);
                    if (!err) err = std::current_exception();
                }
                stop.store(true, std::memory_order_relaxed);
            }
        }
    };

    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        const long long spawn = std::min<long long>(jobs, count > 0 ? count : 1);
        pool.reserve(spawn);
        for (long long t = 0; t < spawn; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);

    std::vector<R> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!slots[i]) break;  // only reachable past a fail-fast stop
        const bool f = failed(*slots[i]);
        out.push_back(std::move(*slots[i]));
        if (fail_fast && f) break;
    }
    return out;
}

}  // namespace dlab::sweep
