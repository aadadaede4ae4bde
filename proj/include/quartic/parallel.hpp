#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace quartic {

inline int default_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n ? static_cast<int>(n) : 1;
}

// Splits [lo, hi] into contiguous chunks and runs fn(chunk_lo, chunk_hi,
// chunk_index) on worker threads.  The first worker exception is rethrown
// after all workers join.
template <class Fn>
void parallel_chunks(long lo, long hi, int jobs, Fn&& fn) {
    if (hi < lo) return;
    const long total = hi - lo + 1;
    if (jobs <= 0) jobs = default_jobs();
    const int n = static_cast<int>(std::min<long>(jobs, total));
    if (n <= 1) {
        fn(lo, hi, 0);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(n);
    const long chunk = total / n, extra = total % n;
    long start = lo;
    for (int i = 0; i < n; ++i) {
        const long len = chunk + (i < extra ? 1 : 0);
        const long s = start, e = start + len - 1;
        start = e + 1;
        workers.emplace_back([&, s, e, i] {
            try {
                fn(s, e, i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace quartic
