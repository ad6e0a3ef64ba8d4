#include "peakon/core.hpp"

#include <cmath>

namespace peakon {

double hamiltonian(const PeakonState& state) {
    const auto& q = state.q();
    const auto& p = state.p();
    const std::size_t n = q.size();
    double h = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        h += 0.5 * p[i] * p[i];
        for (std::size_t j = i + 1; j < n; ++j)
            h += p[i] * p[j] * std::exp(-(q[i] - q[j]));
    }
    return h;
}

void eom_rhs_raw(std::span<const double> q, std::span<const double> p,
                 std::span<double> qdot, std::span<double> pdot) noexcept {
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i) {
        qdot[i] = p[i];
        pdot[i] = 0.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = std::exp(-(q[i] - q[j])); // q[i] > q[j]
            qdot[i] += p[j] * w;
            qdot[j] += p[i] * w;
            // sign(q_i - q_j) = +1 here, the mirrored term gets -1
            pdot[i] += p[i] * p[j] * w;
            pdot[j] -= p[j] * p[i] * w;
        }
    }
}

PhaseDerivative eom_rhs(const PeakonState& state) {
    const std::size_t n = state.q().size();
    PhaseDerivative d{std::vector<double>(n), std::vector<double>(n)};
    eom_rhs_raw(state.q(), state.p(), d.qdot, d.pdot);
    return d;
}

double peakon_field(const PeakonState& state, double x) {
    if (!std::isfinite(x))
        throw OutOfDomainError("peakon_field: non-finite evaluation point");
    const auto& q = state.q();
    const auto& p = state.p();
    double u = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i)
        u += p[i] * std::exp(-std::abs(x - q[i]));
    return u;
}

Covector momentum_from_velocity(std::span<const double> q, const TangentVector& v) {
    if (v.components.size() != q.size())
        throw WrongArityError("momentum_from_velocity: length mismatch");
    const SmallMatrix g = metric_matrix(q);
    return Covector{g.multiply(v.components)};
}

TangentVector velocity_from_momentum(std::span<const double> q, const Covector& p) {
    if (p.components.size() != q.size())
        throw WrongArityError("velocity_from_momentum: length mismatch");
    const SmallMatrix e = e_matrix(q);
    return TangentVector{e.multiply(p.components)};
}

} // namespace peakon
