#pragma once

#include <complex>
#include <cstdint>

namespace monconv {

// Counter-based SplitMix64.
//
// Draw k (k = 0, 1, ...) of stream `seed` is mix(seed + (k + 1) * 0x9E3779B97F4A7C15) with
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z =  z ^ (z >> 31)
// uniform() uses the top 53 bits; normal() is Box-Muller on two consecutive uniforms
// taking the cosine branch only, so every normal consumes exactly two draws.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    static std::uint64_t mix(std::uint64_t z) noexcept;

    std::uint64_t next_u64() noexcept;
    double uniform() noexcept;  // [0, 1)
    double normal() noexcept;   // N(0, 1)
    // Standard complex Gaussian: real and imaginary parts N(0, 1/2), so E|w|^2 = 1.
    std::complex<double> complex_normal() noexcept;
    bool coin() noexcept { return (next_u64() >> 63) == 0; }

    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace monconv
