#ifndef PEAKON_RANDOM_HPP
#define PEAKON_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "peakon/state.hpp"

namespace peakon {

/// Seeded generator with hand-rolled distributions so that sampled values are
/// identical across standard libraries and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Magnitude uniform in [lo, hi], sign chosen by a fair bit.
    double signed_uniform(double lo, double hi) {
        const double mag = uniform(lo, hi);
        return bit() ? mag : -mag;
    }

    bool bit() { return (eng_() & 1u) != 0; }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

/// Positions with adjacent gaps uniform in [gap_lo, gap_hi], anchored at
/// q_n = 0.
std::vector<double> random_positions(Rng& rng, int n, double gap_lo, double gap_hi);

/// State with random positions as above and momenta of magnitude
/// [p_lo, p_hi] and random signs.
PeakonState random_state(Rng& rng, int n, double gap_lo, double gap_hi,
                         double p_lo, double p_hi);

} // namespace peakon

#endif
