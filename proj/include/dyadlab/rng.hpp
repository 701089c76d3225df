#pragma once

// Deterministic random source. Experiments must replay bit-identically from
// a (seed, trial) pair on any machine and with any worker count, so we avoid
// std::uniform_*_distribution (implementation-defined sequences) and use an
// explicit splitmix64 stream.

#include <cstdint>
#include <thread>
#include <vector>

namespace dyadlab {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Derives an independent stream, e.g. per trial index.
    static Rng derive(std::uint64_t master, std::uint64_t stream) {
        Rng mix(master ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        mix.next_u64();
        mix.next_u64();
        return mix;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // Rademacher sign.
    double sign() { return (next_u64() & 1) ? 1.0 : -1.0; }

private:
    std::uint64_t state_;
};

// Runs fn(i) for i in [0, n). Each index writes only its own slot in the
// caller's output, so the result is identical for every worker count.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace dyadlab
