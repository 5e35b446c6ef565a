#pragma once
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ro2ss {

/// RO2SS_THREADS when set, else the hardware count (at least 1).
int default_threads();

/// Apply fn to every index; work is distributed, results must be written to
/// per-index slots so that the merge order is deterministic.
inline void parallel_for(std::size_t nitems, int threads,
                         const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || nitems < 2) {
        for (std::size_t i = 0; i < nitems; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= nitems) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nt = threads;
    if (static_cast<std::size_t>(nt) > nitems) nt = static_cast<int>(nitems);
    pool.reserve(nt - 1);
    for (int t = 0; t + 1 < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

} // namespace ro2ss
