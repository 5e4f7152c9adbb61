#pragma once

// Seedable, stream-splittable random source. Raw mt19937_64 bits are mapped
// to doubles by hand so that a given (seed, stream) pair reproduces the same
// sequence on any platform.

#include <cmath>
#include <cstdint>
#include <random>

namespace lmg {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : gen_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform on the open interval (0, 1); safe for log transforms.
    double uniform_open() {
        return (static_cast<double>(gen_() >> 12) + 0.5) * 0x1.0p-52;
    }

    // Exponential waiting time with the given rate, strictly positive.
    double exponential(double rate) { return -std::log(uniform_open()) / rate; }

    // Geometric over n = 0,1,... with P(n) = (1-q) q^n.
    int geometric(double q) {
        if (q <= 0.0)
            return 0;
        return static_cast<int>(std::log1p(-uniform()) / std::log(q));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace lmg
