#ifndef PLANARCALC_RNG_HPP
#define PLANARCALC_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace planarcalc {

/** Deterministic generator (splitmix64 core). Distributions are hand-rolled
 * so that reports are byte-identical across standard libraries. */
class rng {
  public:
    explicit rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /** Uniform in [0, 1). */
    double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /** Standard normal via Box-Muller. */
    double normal() {
        double u1 = uniform(), u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    std::complex<double> normal_complex() {
        return {normal() * M_SQRT1_2, normal() * M_SQRT1_2};
    }

    /** Uniform point on the unit circle. */
    std::complex<double> unit_circle() {
        double t = uniform(0.0, 2.0 * M_PI);
        return {std::cos(t), std::sin(t)};
    }

  private:
    std::uint64_t state_;
};

}  // namespace planarcalc

#endif
