#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace oscar::rng {

// SplitMix64 finalizer. Used only to turn (master seed, stream tag) pairs into
// well-separated engine seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent sub-streams of one master seed. Signal, sensing matrix and noise
// draws never share a stream, so regenerating any one of them in isolation
// reproduces the same values.
enum class Stream : std::uint64_t {
    Signal = 1,
    Matrix = 2,
    Noise = 3,
    Trial = 4,
};

inline std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t index = 0) {
    const auto tag = static_cast<std::uint64_t>(stream);
    return splitmix64(splitmix64(master ^ (tag * 0xD6E8FEB86659FD93ull)) + index);
}

// Deterministic, portable draws: the engine is std::mt19937_64 (fully specified
// by the C++ standard), uniforms map the top 53 bits onto [0, 1), and normals
// use the Marsaglia polar method. Identical seeds give identical sequences on
// any conforming implementation, up to libm rounding in sqrt/log.
class Generator {
  public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    /// Standard normal.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace oscar::rng
