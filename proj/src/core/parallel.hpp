#ifndef PLANARCALC_PARALLEL_HPP
#define PLANARCALC_PARALLEL_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace planarcalc {

/** Thread cap: min(hardware_concurrency, PLANAR_CALC_THREADS). */
inline int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("PLANAR_CALC_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

/** Static block partition of [0, n); results must be written to
 * preallocated per-index slots so output is independent of scheduling. */
inline void parallel_for(long n, const std::function<void(long, long)>& body) {
    int nt = std::min<long>(max_threads(), std::max<long>(1, n / 64));
    if (nt <= 1 || n < 2) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    long chunk = (n + nt - 1) / nt;
    for (int t = 0; t < nt; ++t) {
        long lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace planarcalc

#endif
