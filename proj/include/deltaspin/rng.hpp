#pragma once

#include <cstdint>
#include <random>

#include "deltaspin/types.hpp"

namespace deltaspin {

// Seeded generator with bit-stable uniforms. std::uniform_real_distribution is
// implementation-defined, so draws go through the explicit 53-bit mapping.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    Complex uniform_complex(double lo, double hi) {
        const double re = uniform(lo, hi);
        const double im = uniform(lo, hi);
        return {re, im};
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace deltaspin
