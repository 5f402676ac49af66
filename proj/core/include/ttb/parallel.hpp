#ifndef TTB_PARALLEL_HPP
#define TTB_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace ttb {

// Static range partition: body(i) must only touch slot i of any shared
// output, which keeps results independent of the worker count.
template <typename Body>
void parallel_for(std::int64_t begin, std::int64_t end, int workers, Body&& body) {
    const std::int64_t count = end - begin;
    if (count <= 0) return;
    if (workers <= 1 || count == 1) {
        for (std::int64_t i = begin; i < end; ++i) body(i);
        return;
    }
    const int nw = static_cast<int>(std::min<std::int64_t>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nw));
    const std::int64_t chunk = (count + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
        const std::int64_t lo = begin + w * chunk;
        const std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body]() {
            for (std::int64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

// Pairwise (cascade) summation: deterministic for a fixed element order and
// better conditioned than a running sum.
inline double pairwise_sum(const double* v, std::size_t n) {
    if (n == 0) return 0.0;
    if (n == 1) return v[0];
    if (n == 2) return v[0] + v[1];
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(v.data(), v.size());
}

} // namespace ttb

#endif
