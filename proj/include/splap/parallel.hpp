#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace splap {

struct Parallelism {
    int threads = 1;  // 1 = run inline

    static Parallelism auto_detect() {
        unsigned n = std::thread::hardware_concurrency();
        return Parallelism{static_cast<int>(n == 0 ? 1 : n)};
    }
    // 0 means auto.
    static Parallelism from_request(int requested) {
        return requested <= 0 ? auto_detect() : Parallelism{requested};
    }
};

// Runs body(i) for i in [0, n). Results must be written to per-index slots
// by the caller; chunking never affects the outcome.
template <class F>
void parallel_for(long n, const Parallelism& par, F&& body) {
    if (n <= 0) return;
    const int t = static_cast<int>(std::min<long>(std::max(par.threads, 1), n));
    if (t == 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto run_chunk = [&](long lo, long hi) {
        try {
            for (long i = lo; i < hi; ++i) body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> workers;
    workers.reserve(t - 1);
    const long chunk = (n + t - 1) / t;
    for (int w = 1; w < t; ++w) {
        const long lo = w * chunk;
        if (lo >= n) break;
        workers.emplace_back(run_chunk, lo, std::min(n, lo + chunk));
    }
    run_chunk(0, std::min(n, chunk));
    for (auto& th : workers) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace splap
