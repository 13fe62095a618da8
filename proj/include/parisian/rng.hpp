#pragma once

#include <cmath>
#include <cstdint>

namespace parisian {

// xoshiro256++ with splitmix64 stream derivation.  All samplers are written
// out explicitly so that results are bit-identical across compilers and
// standard libraries; std::<distribution> makes no such promise.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform on (0, 1), never exactly 0 or 1
    double uniform() {
        const double u = (next_u64() >> 11) * 0x1.0p-53;
        return u == 0.0 ? 0x1.0p-54 : u;
    }

    double normal() {
        // Box-Muller without the cached second value
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double exponential(double rate) { return -std::log(uniform()) / rate; }

    // inverse Gaussian (mean mu, shape lam) by Michael-Schucany-Haas
    double inverse_gaussian(double mu, double lam) {
        const double n = normal();
        const double y = n * n;
        const double x =
            mu + mu * mu * y / (2.0 * lam) -
            mu / (2.0 * lam) * std::sqrt(4.0 * mu * lam * y + mu * mu * y * y);
        if (uniform() <= mu / (mu + x)) return x;
        return mu * mu / x;
    }

    // one-sided stable 1/2 (Levy) with scale lam: first-passage law of
    // driftless Brownian motion
    double levy_stable(double lam) {
        const double n = normal();
        return lam / (n * n);
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4];
};

}  // namespace parisian
