#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>

namespace swarmpos {

/// Purpose tags mixed into derived stream keys so that streams used for
/// different things never alias.
enum class StreamPurpose : std::uint64_t {
    world = 1,
    initial_poses = 2,
    bootstrap = 3,
    sense = 4,
    perturb = 5,
    baseline = 6,
    failure = 7,
    drift = 8,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives a stream key from (master seed, purpose, coordinates...). The key
/// depends only on its inputs, never on call order, which keeps parallel
/// schedules reproducible.
inline std::uint64_t derive_key(std::uint64_t seed, StreamPurpose purpose,
                                std::initializer_list<std::uint64_t> coords = {}) {
    std::uint64_t h = splitmix64(seed ^ 0x5851f42d4c957f2dULL);
    h = splitmix64(h ^ static_cast<std::uint64_t>(purpose));
    for (auto c : coords) h = splitmix64(h ^ c);
    return h;
}

/// Seeded random stream. Engine is std::mt19937_64 (bit-exact by standard);
/// the conversions below are written out so results do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t key) : engine_(key) {}
    Rng(std::uint64_t seed, StreamPurpose purpose, std::initializer_list<std::uint64_t> coords = {})
        : engine_(derive_key(seed, purpose, coords)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Standard normal via Box-Muller (one draw per call, the sine branch is discarded).
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace swarmpos
