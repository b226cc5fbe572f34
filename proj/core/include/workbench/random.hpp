#pragma once

// Seeded generator for property sweeps. The distributions are written out
// by hand on top of std::mt19937_64 because the standard distributions are
// not specified bit-for-bit across library implementations.

#include <cstdint>
#include <random>

#include "workbench/numcore.hpp"

namespace workbench {

class Rng {
 public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(engine_() % span);
    }

    cplx complex(double half_width = 1.0) {
        const double re = uniform(-half_width, half_width);
        return {re, uniform(-half_width, half_width)};
    }

    /// Uniform in the disc of the given radius (rejection sampling).
    cplx in_disc(double radius) {
        for (;;) {
            const cplx z = complex(1.0);
            if (std::norm(z) < 1.0) return radius * z;
        }
    }

 private:
    std::mt19937_64 engine_;
};

}  // namespace workbench
