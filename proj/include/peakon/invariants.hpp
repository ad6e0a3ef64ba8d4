#ifndef PEAKON_INVARIANTS_HPP
#define PEAKON_INVARIANTS_HPP

#include <optional>
#include <span>

#include "peakon/state.hpp"

namespace peakon {

/// H0 = p1 + ... + pn (conserved pairing with the translation symmetry).
double h0(const PeakonState& state);

/// H1: the Hamiltonian itself.
double h1(const PeakonState& state);

/// Corrected cubic first integral for three peaks:
///   H2 = (1/3)(p1^3+p2^3+p3^3)
///      + e^{-(q1-q2)}(p1^2 p2 + p1 p2^2)
///      + e^{-(q2-q3)}(p2^2 p3 + p2 p3^2)
///      + e^{-(q1-q3)}(p1^2 p3 + p1 p3^2)
///      + 2 e^{-(q1-q3)} p1 p2 p3
/// It is the unique cubic consistent with the factored form of hhat below.
double h2_threepeakon(const PeakonState& state);

/// Factored product form of the combined invariant:
///   n=2: p1 p2 (e^{-(q1-q2)} - 1)
///   n=3: p1 p2 p3 (1 + e^{-(q1-q3)} - e^{-(q1-q2)} - e^{-(q2-q3)})
double hhat(const PeakonState& state);

/// Defining combination H1 - (1/2) H0^2 (n=2) or
/// H2 - H0 H1 + (1/6) H0^3 (n=3); agrees with hhat to roundoff.
double hhat_from_integrals(const PeakonState& state);

/// g(qdot, X) with qdot = E p and X the uniform translation field;
/// numerically identical to h0.
double killing_pairing(const PeakonState& state);

struct InvariantVector {
    double h0 = 0.0;
    double h1 = 0.0;
    std::optional<double> h2;   // n = 3 only
    std::optional<double> hhat; // n in {2, 3}
};

InvariantVector invariants_of(const PeakonState& state);

struct DriftReport {
    double h0 = 0.0;
    double h1 = 0.0;
    std::optional<double> h2;

    double max() const noexcept { return std::max(std::max(h0, h1), h2.value_or(0.0)); }
};

/// Max |H_i(t) - H_i(0)| / max(1, |H_i(0)|) over the recorded values.
DriftReport invariant_drift(std::span<const InvariantVector> records);

} // namespace peakon

#endif
