#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace slipsim {

/// Deterministic RNG: mt19937_64 engine (bit-exact per the standard) with
/// hand-rolled distributions, since the std:: distribution algorithms are
/// implementation-defined and would break byte-identical reruns across
/// toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        // Rejection-free modulo is fine here; n is tiny compared to 2^64.
        return n == 0 ? 0 : engine_() % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Box-Muller without caching the spare so call counts stay predictable.
    double normal(double mean = 0.0, double sd = 1.0) {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
        return mean + sd * z;
    }

    /// Normal truncated to (0, inf); falls back to a small positive floor if
    /// the mean is deep in the negative tail.
    double normal_positive(double mean, double sd) {
        if (sd <= 0.0) return mean > 0.0 ? mean : 1e-6;
        for (int i = 0; i < 64; ++i) {
            double v = normal(mean, sd);
            if (v > 0.0) return v;
        }
        return 1e-6;
    }

    /// Uniform angle in [0, 2*pi).
    double angle() { return uniform(0.0, 6.283185307179586); }

    std::uint64_t next_u64() { return engine_(); }

    /// Child stream derived from the current state plus a tag; used where a
    /// sub-process needs its own stream without perturbing the parent's
    /// draw count dependence.
    Rng fork(std::uint64_t tag) {
        return Rng(mix(engine_(), tag));
    }

    /// splitmix64 finalizer; good avalanche for seed derivation.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b = 0) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ULL + b * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t hash_str(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;  // FNV-1a
        }
        return h;
    }

private:
    std::mt19937_64 engine_;
};

/// Stable per-trial seed: depends only on (base, policy, material, trial),
/// never on unrelated config content.
inline std::uint64_t split_seed(std::uint64_t base, std::string_view policy,
                                std::string_view material, std::uint64_t trial) {
    std::uint64_t h = Rng::mix(base);
    h = Rng::mix(h, Rng::hash_str(policy));
    h = Rng::mix(h, Rng::hash_str(material));
    h = Rng::mix(h, trial + 1);
    return h;
}

}  // namespace slipsim
