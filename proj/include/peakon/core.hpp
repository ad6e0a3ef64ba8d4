#ifndef PEAKON_CORE_HPP
#define PEAKON_CORE_HPP

#include <span>
#include <vector>

#include "peakon/matrix.hpp"
#include "peakon/state.hpp"

namespace peakon {

/// H(q,p) = (1/2) <E(q) p, p>. Strictly positive whenever p != 0.
double hamiltonian(const PeakonState& state);

struct PhaseDerivative {
    std::vector<double> qdot;
    std::vector<double> pdot;
};

/// Equations of motion of the peakon Hamiltonian:
///   qdot_i = sum_j p_j e^{-|q_i - q_j|}
///   pdot_i = p_i sum_{j != i} p_j sign(q_i - q_j) e^{-|q_i - q_j|}
PhaseDerivative eom_rhs(const PeakonState& state);

// Allocation-free variant used by the integrator; q must already be ordered.
void eom_rhs_raw(std::span<const double> q, std::span<const double> p,
                 std::span<double> qdot, std::span<double> pdot) noexcept;

/// Wave profile u(x) = sum_i p_i e^{-|x - q_i|} of the frozen state.
double peakon_field(const PeakonState& state, double x);

/// Lowers a velocity with the metric: p = g(q) v.
Covector momentum_from_velocity(std::span<const double> q, const TangentVector& v);

/// Raises a momentum with the Gram matrix: v = E(q) p.
TangentVector velocity_from_momentum(std::span<const double> q, const Covector& p);

} // namespace peakon

#endif
