#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace hl {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Decorrelated stream seed for (base seed, stream index) pairs.  Used for
// per-start / per-chunk / per-instance seeding so results do not depend on
// worker scheduling.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream ^ 0xA3C59AC2F1E38D07ULL));
}

// Deterministic generator with hand-rolled variate transforms.  The stdlib
// distributions are implementation-defined, so everything downstream of a
// seed goes through these.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    // Uniform on (0, 1), never exactly 0 or 1.
    double uniform01() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(gen_() % span);
    }

    double sign() { return (gen_() & 1) ? 1.0 : -1.0; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::complex<double> complex_gaussian() { return {gaussian(), gaussian()}; }

    // Uniform phase on the unit circle.
    std::complex<double> unit_phase() {
        const double a = 6.283185307179586476925286766559 * uniform01();
        return {std::cos(a), std::sin(a)};
    }

    // Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape < 1 boosted through
    // Gamma(shape + 1) * U^{1/shape}.
    double gamma(double shape) {
        if (shape <= 0.0) return 0.0;
        if (shape < 1.0) {
            const double g = gamma(shape + 1.0);
            return g * std::pow(uniform01(), 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        while (true) {
            double x, v;
            do {
                x = gaussian();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace hl
