#include "peakon/random.hpp"

namespace peakon {

std::vector<double> random_positions(Rng& rng, int n, double gap_lo, double gap_hi) {
    std::vector<double> q(static_cast<std::size_t>(n), 0.0);
    for (int i = n - 2; i >= 0; --i)
        q[static_cast<std::size_t>(i)] =
            q[static_cast<std::size_t>(i + 1)] + rng.uniform(gap_lo, gap_hi);
    return q;
}

PeakonState random_state(Rng& rng, int n, double gap_lo, double gap_hi,
                         double p_lo, double p_hi) {
    std::vector<double> q = random_positions(rng, n, gap_lo, gap_hi);
    std::vector<double> p(static_cast<std::size_t>(n));
    for (auto& pi : p)
        pi = rng.signed_uniform(p_lo, p_hi);
    return PeakonState(std::move(q), std::move(p));
}

} // namespace peakon
