#include "peakon/invariants.hpp"

#include <cmath>

#include "peakon/core.hpp"

namespace peakon {

double h0(const PeakonState& state) {
    double s = 0.0;
    for (double pi : state.p())
        s += pi;
    return s;
}

double h1(const PeakonState& state) {
    return hamiltonian(state);
}

double h2_threepeakon(const PeakonState& state) {
    if (state.size() != 3)
        throw WrongArityError("h2_threepeakon: needs n = 3");
    const auto& q = state.q();
    const auto& p = state.p();
    const double u = std::exp(-(q[0] - q[1]));
    const double v = std::exp(-(q[1] - q[2]));
    const double w = std::exp(-(q[0] - q[2]));
    return (p[0] * p[0] * p[0] + p[1] * p[1] * p[1] + p[2] * p[2] * p[2]) / 3.0 +
           u * (p[0] * p[0] * p[1] + p[0] * p[1] * p[1]) +
           v * (p[1] * p[1] * p[2] + p[1] * p[2] * p[2]) +
           w * (p[0] * p[0] * p[2] + p[0] * p[2] * p[2]) +
           2.0 * w * p[0] * p[1] * p[2];
}

double hhat(const PeakonState& state) {
    const auto& q = state.q();
    const auto& p = state.p();
    if (state.size() == 2)
        return p[0] * p[1] * (std::exp(-(q[0] - q[1])) - 1.0);
    if (state.size() == 3)
        return p[0] * p[1] * p[2] *
               (1.0 + std::exp(-(q[0] - q[2])) - std::exp(-(q[0] - q[1])) -
                std::exp(-(q[1] - q[2])));
    throw WrongArityError("hhat: needs n in {2, 3}");
}

double hhat_from_integrals(const PeakonState& state) {
    const double s0 = h0(state);
    if (state.size() == 2)
        return h1(state) - 0.5 * s0 * s0;
    if (state.size() == 3)
        return h2_threepeakon(state) - s0 * h1(state) + s0 * s0 * s0 / 6.0;
    throw WrongArityError("hhat_from_integrals: needs n in {2, 3}");
}

double killing_pairing(const PeakonState& state) {
    const auto& q = state.q();
    const TangentVector qdot = velocity_from_momentum(q, Covector{state.p()});
    const SmallMatrix g = metric_matrix(q);
    const std::vector<double> gq = g.multiply(qdot.components);
    double s = 0.0;
    for (double c : gq) // X = (1, ..., 1)
        s += c;
    return s;
}

InvariantVector invariants_of(const PeakonState& state) {
    InvariantVector v;
    v.h0 = h0(state);
    v.h1 = h1(state);
    if (state.size() == 3)
        v.h2 = h2_threepeakon(state);
    if (state.size() >= 2)
        v.hhat = hhat(state);
    return v;
}

DriftReport invariant_drift(std::span<const InvariantVector> records) {
    DriftReport d;
    if (records.empty())
        return d;
    const InvariantVector& first = records.front();
    if (first.h2.has_value())
        d.h2 = 0.0;
    // Normalization max(1, |H_i(0)|) keeps near-zero initial values from
    // blowing up the quotient.
    const double n0 = std::max(1.0, std::abs(first.h0));
    const double n1 = std::max(1.0, std::abs(first.h1));
    const double n2 = first.h2 ? std::max(1.0, std::abs(*first.h2)) : 1.0;
    for (const InvariantVector& r : records) {
        d.h0 = std::max(d.h0, std::abs(r.h0 - first.h0) / n0);
        d.h1 = std::max(d.h1, std::abs(r.h1 - first.h1) / n1);
        if (d.h2 && r.h2)
            d.h2 = std::max(*d.h2, std::abs(*r.h2 - *first.h2) / n2);
    }
    return d;
}

} // namespace peakon
