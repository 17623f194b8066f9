#ifndef SELBERG_RNG_HPP
#define SELBERG_RNG_HPP

#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

#include "selberg/numeric.hpp"

namespace selberg {

// Deterministic draws built directly from mt19937_64 output words; no
// standard-library distributions are used, so sequences are identical
// across platforms and toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    double angle() { return 2.0 * std::numbers::pi * unit(); }

    // modulus uniform in [mlo, mhi], phase uniform
    cplx polar_draw(double mlo, double mhi) {
        double m = uniform(mlo, mhi);
        double a = angle();
        return cplx(m * std::cos(a), m * std::sin(a));
    }

    // modulus log-uniform in [mlo, mhi]
    cplx log_polar_draw(double mlo, double mhi) {
        double m = mlo * std::exp(uniform(0.0, std::log(mhi / mlo)));
        double a = angle();
        return cplx(m * std::cos(a), m * std::sin(a));
    }

    std::uint64_t word() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

// splitmix64 step, used to derive independent child seeds.
inline std::uint64_t seed_mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Stable per-check seed: FNV-1a over the tag folded with the base seed
// and instance index.
inline std::uint64_t seed_for(std::uint64_t base, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char ch : tag) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
    }
    return seed_mix(base ^ seed_mix(h + index));
}

}  // namespace selberg

#endif
