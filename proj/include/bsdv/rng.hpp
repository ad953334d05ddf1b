#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace bsdv {

/// Deterministic, platform-independent random stream (SplitMix64 core).
///
/// Checks draw one substream per sample, keyed by (seed, sample_index), so a
/// run is reproducible no matter how samples are partitioned or reordered.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL) {}

    /// Substream for one sample: mixes the index into the seed so streams
    /// for distinct indices are statistically independent.
    static Rng substream(std::uint64_t seed, std::uint64_t sample_index) {
        Rng r(seed);
        r.state_ ^= mix64(sample_index + 0x9E3779B97F4A7C15ULL);
        r.next_u64();
        return r;
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform in [0, 1); 53 mantissa bits, identical on every platform.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform on the complex disc of the given radius (rejection-free:
    /// sqrt-radius times uniform angle).
    std::complex<double> complex_in_disc(double radius) {
        const double r = radius * std::sqrt(uniform01());
        const double t = 6.283185307179586476925286766559 * uniform01();
        return {r * std::cos(t), r * std::sin(t)};
    }

    std::complex<double> unit_phase() {
        const double t = 6.283185307179586476925286766559 * uniform01();
        return {std::cos(t), std::sin(t)};
    }

    /// Standard normal via Box-Muller (deterministic, no cached spare).
    double normal() {
        double u1 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::complex<double> complex_normal() { return {normal(), normal()}; }

  private:
    static std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

} // namespace bsdv
