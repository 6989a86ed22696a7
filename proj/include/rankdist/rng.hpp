#pragma once

#include <cmath>
#include <cstdint>

namespace rankdist {

// Reproducibility contract for the simulation module: every replication r
// owns an independent substream. Its state is expanded from
// splitmix64(seed XOR (r+1) * 0x9e3779b97f4a7c15) into a xoshiro256++
// generator, and standard normals come from the basic Box-Muller transform
// on 53-bit uniforms. All three pieces are fixed-point algorithms with no
// platform-dependent behavior, so a (seed, config) pair gives bit-identical
// results everywhere and for any worker count.

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform on (0,1]; the +1 keeps log() away from zero
    double uniform_open0() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    // uniform on [0,1)
    double uniform_half_open() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

/// Standard normal stream via Box-Muller on xoshiro256++ uniforms.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = rng_.uniform_open0();
        const double u2 = rng_.uniform_half_open();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;  // 2*pi
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    Xoshiro256pp rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

inline std::uint64_t replication_seed(std::uint64_t seed, long long replication) {
    const std::uint64_t r = static_cast<std::uint64_t>(replication) + 1;
    return SplitMix64(seed ^ (r * 0x9e3779b97f4a7c15ULL)).next();
}

}  // namespace rankdist
