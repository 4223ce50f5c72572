#pragma once

// Minimal deterministic work splitter: items are processed into indexed
// slots, so the combined result is independent of the thread count.

#include <atomic>
#include <thread>
#include <vector>

namespace quadstab {

template <class F>
void parallel_for(long n, long threads, F&& body) {
    if (threads <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<long> next(0);
    auto worker = [&]() {
        while (true) {
            long i = next.fetch_add(1);
            if (i >= n) break;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    long count = std::min<long>(threads, n);
    pool.reserve(static_cast<std::size_t>(count));
    for (long t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace quadstab
