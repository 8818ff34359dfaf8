#include "airc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace airc {

namespace {

int detect_threads() {
    if (const char* env = std::getenv("AIRC_THREADS")) {
        try {
            const int requested = std::stoi(env);
            if (requested >= 1) return requested;
        } catch (...) {
            // fall through to the default
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

}  // namespace

int kernel_threads() {
    static const int threads = detect_threads();
    return threads;
}

void parallel_for_rows(std::int64_t count, const std::function<void(std::int64_t, std::int64_t)>& fn) {
    const int threads = kernel_threads();
    // Small ranges are not worth the spawn overhead.
    if (threads <= 1 || count < 256) {
        fn(0, count);
        return;
    }
    const std::int64_t workers = std::min<std::int64_t>(threads, count);
    const std::int64_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace airc
