#pragma once

// Replica i always draws from Rng(seed, stream_base + i). Workers take static
// contiguous chunks and write into out[i], so results do not depend on the
// number of threads.

#include "rstir/rng.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rstir {

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

template <class T, class F>
std::vector<T> run_replicas(long count, std::uint64_t seed, std::uint64_t stream_base, unsigned threads, F f) {
    std::vector<T> out(static_cast<std::size_t>(count));
    const long nt = std::max(1L, std::min<long>(resolve_threads(threads), count));
    std::exception_ptr err;
    std::mutex mu;
    auto work = [&](long lo, long hi) {
        try {
            for (long i = lo; i < hi; ++i) {
                Rng rng(seed, stream_base + static_cast<std::uint64_t>(i));
                out[static_cast<std::size_t>(i)] = f(rng);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!err) err = std::current_exception();
        }
    };
    if (nt == 1) {
        work(0, count);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (count + nt - 1) / nt;
        for (long t = 0; t < nt; ++t) {
            const long lo = t * chunk, hi = std::min(count, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace rstir
