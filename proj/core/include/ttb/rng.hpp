#ifndef TTB_RNG_HPP
#define TTB_RNG_HPP

#include <cmath>
#include <cstdint>

namespace ttb {

// splitmix64 step; the whole reproducibility story rests on this generator,
// so it is spelled out here rather than delegated to std::mt19937 (whose
// distributions are not bit-stable across standard libraries).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Counter-based random stream: the state is derived from (seed, stream id)
// only, so stream i yields identical values no matter which thread draws it
// or how many other streams were consumed before.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t s = seed;
        std::uint64_t a = splitmix64(s);
        s = a ^ (stream_id * 0x9E3779B97F4A7C15ULL + 0x243F6A8885A308D3ULL);
        (void)splitmix64(s);
        (void)splitmix64(s);
        state_ = s;
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Box-Muller; the spare value is cached so the draw sequence is a pure
    // function of the stream position.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        double u2 = next_double();
        while (u1 <= 1e-300) u1 = next_double();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        return next_u64() % n; // modulo bias irrelevant at our scales
    }

private:
    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace ttb

#endif
