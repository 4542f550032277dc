#include "weylcq/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace weylcq {

namespace {
std::atomic<int> g_workers{0};
}

void set_worker_threads(int n) { g_workers.store(n < 0 ? 0 : n); }

int worker_threads() {
    int n = g_workers.load();
    if (n == 0) {
        unsigned hc = std::thread::hardware_concurrency();
        n = hc ? static_cast<int>(hc) : 1;
    }
    return n;
}

int parallel_chunks(long long begin, long long end,
                    const std::function<void(long long, long long, int)>& body) {
    const long long total = end - begin;
    if (total <= 0) return 0;
    int workers = std::min<long long>(worker_threads(), total);
    if (workers <= 1) {
        body(begin, end, 0);
        return 1;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const long long chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long long lo = begin + w * chunk;
        long long hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, lo, hi, w);
    }
    for (auto& t : pool) t.join();
    return static_cast<int>(pool.size());
}

}  // namespace weylcq
