#include "peakon/collision.hpp"

#include <cmath>

#include "peakon/invariants.hpp"

namespace peakon {

std::string to_string(Outcome o) {
    switch (o) {
    case Outcome::Collides:
        return "Collides";
    case Outcome::Escapes:
        return "Escapes";
    default:
        return "PossibleCollision";
    }
}

std::string to_string(SectorLabel s) {
    switch (s) {
    case SectorLabel::I:
        return "I";
    case SectorLabel::II:
        return "II";
    case SectorLabel::III:
        return "III";
    default:
        return "IV";
    }
}

std::pair<double, double> foliation_invariants_2d(std::span<const double> q) {
    if (q.size() != 2)
        throw WrongArityError("foliation_invariants_2d: needs n = 2");
    require_ordered_positions(q);
    return {std::exp(q[0]) - std::exp(q[1]), std::exp(-q[0]) - std::exp(-q[1])};
}

namespace {

void require_nonzero_momenta(const PeakonState& state, const char* what) {
    for (double pi : state.p())
        if (pi == 0.0)
            throw OnBoundaryError(std::string(what) +
                                  ": zero momentum, state degenerates to fewer peaks");
}

std::vector<int> momentum_signs(const PeakonState& state) {
    std::vector<int> s;
    s.reserve(state.p().size());
    for (double pi : state.p())
        s.push_back(pi > 0.0 ? 1 : (pi < 0.0 ? -1 : 0));
    return s;
}

} // namespace

SectorLabel classify_sector_2d(const PeakonState& state) {
    if (state.size() != 2)
        throw WrongArityError("classify_sector_2d: needs n = 2");
    require_nonzero_momenta(state, "classify_sector_2d");
    const double p1 = state.p()[0];
    const double p2 = state.p()[1];
    if (p1 < 0.0 && p2 > 0.0)
        return SectorLabel::I;
    if (p1 > 0.0 && p2 < 0.0)
        return SectorLabel::IV;
    if (p1 > 0.0)
        return SectorLabel::II;
    return SectorLabel::III;
}

double collision_bound_2d(const PeakonState& state) {
    if (state.size() != 2)
        throw WrongArityError("collision_bound_2d: needs n = 2");
    require_nonzero_momenta(state, "collision_bound_2d");
    if (!(state.p()[0] < 0.0 && state.p()[1] > 0.0))
        throw NotCollidingError("collision_bound_2d: state is not in the colliding sector");
    const double y0 = std::exp(state.q()[1] - state.q()[0]);
    const double s0 = h0(state);
    const double rate_sq = 2.0 * h1(state) - s0 * s0; // positive in Sector I
    if (rate_sq <= 1e-15)
        throw DegenerateError("collision_bound_2d: 2 H1 - H0^2 is numerically zero");
    return 2.0 * std::sqrt(1.0 - y0) / (y0 * std::sqrt((1.0 + y0) * rate_sq));
}

Verdict predict_2d(const PeakonState& state) {
    if (state.size() != 2)
        throw WrongArityError("predict_2d: needs n = 2");
    require_nonzero_momenta(state, "predict_2d");
    const double p1 = state.p()[0];
    const double p2 = state.p()[1];
    const double s0 = h0(state);
    const double s1 = h1(state);
    Verdict v;
    v.h = p1 - p2;
    v.a_sq = 4.0 * s1 - s0 * s0;
    v.hhat = hhat(state);
    v.signs = momentum_signs(state);
    if (p2 > 0.0 && p1 < 0.0) {
        v.outcome = Outcome::Collides;
        v.bound_time = collision_bound_2d(state);
    } else {
        v.outcome = Outcome::Escapes;
    }
    return v;
}

Verdict necessary_3d(const PeakonState& state) {
    if (state.size() != 3)
        throw WrongArityError("necessary_3d: needs n = 3");
    require_nonzero_momenta(state, "necessary_3d");
    const auto& p = state.p();
    Verdict v;
    v.h = p[0] - p[1];
    const double s0 = h0(state);
    v.a_sq = 4.0 * h1(state) - s0 * s0;
    v.hhat = hhat(state);
    v.signs = momentum_signs(state);
    if (p[0] < 0.0 && p[1] > 0.0) {
        v.outcome = Outcome::PossibleCollision;
        v.condition_fired = 1;
    } else if (p[1] < 0.0 && p[2] > 0.0) {
        v.outcome = Outcome::PossibleCollision;
        v.condition_fired = 2;
    } else {
        v.outcome = Outcome::Escapes; // collision excluded
    }
    return v;
}

namespace {

void require_3d_ordered(std::span<const double> q, const char* what) {
    if (q.size() != 3)
        throw WrongArityError(std::string(what) + ": needs n = 3");
    require_ordered_positions(q);
}

} // namespace

Covector alpha_form_3d(std::span<const double> q) {
    require_3d_ordered(q, "alpha_form_3d");
    const double u = std::exp(q[1] - q[0]);      // e^{-(q1-q2)}
    const double v = std::exp(q[2] - q[1]);      // e^{-(q2-q3)}
    const double uv = std::exp(q[2] - q[0]);     // e^{-(q1-q3)}
    return Covector{{u - uv * v,                 // u(1 - v^2)
                     uv * uv - 1.0,              // -(1 - u^2 v^2)
                     v - u * uv}};               // v(1 - u^2)
}

std::array<double, 3> alpha_exterior_derivative_3d(std::span<const double> q) {
    require_3d_ordered(q, "alpha_exterior_derivative_3d");
    const double u = std::exp(q[1] - q[0]);
    const double v = std::exp(q[2] - q[1]);
    const double uv = u * v;
    // With A = e^{-(q1-q2)}, B = e^{-(q1+q2-2q3)}, C = e^{-2(q1-q3)},
    // D = e^{-(q2-q3)}, F = e^{-(2q1-q2-q3)}:
    const double a = u;            // A
    const double b = u * v * v;    // B
    const double c = uv * uv;      // C
    const double d = v;            // D
    const double f = u * u * v;    // F
    const double d1a2 = -2.0 * c;  // d(alpha_2)/dq1
    const double d2a1 = a + b;     // d(alpha_1)/dq2
    const double d1a3 = 2.0 * f;   // d(alpha_3)/dq1
    const double d3a1 = -2.0 * b;  // d(alpha_1)/dq3
    const double d2a3 = -d - f;    // d(alpha_3)/dq2
    const double d3a2 = 2.0 * c;   // d(alpha_2)/dq3
    return {d1a2 - d2a1, d1a3 - d3a1, d2a3 - d3a2};
}

double integrability_defect_3d(std::span<const double> q) {
    const Covector a = alpha_form_3d(q);
    const std::array<double, 3> d = alpha_exterior_derivative_3d(q);
    return d[0] * a.components[2] - d[1] * a.components[1] + d[2] * a.components[0];
}

double integrability_defect_d1_3d(std::span<const double> q, double step) {
    require_3d_ordered(q, "integrability_defect_d1_3d");
    const auto d1_form = [](std::span<const double> qq) {
        return Covector{{1.0, -std::exp(qq[1] - qq[0]), 0.0}};
    };
    return integrability_defect_fd(d1_form, q, step);
}

std::set<int> distribution_flag(const PeakonState& state, double tol) {
    if (tol < 0.0)
        throw OutOfDomainError("distribution_flag: tolerance must be non-negative");
    std::set<int> flags;
    const auto& p = state.p();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (std::abs(p[i]) <= tol)
            flags.insert(static_cast<int>(i) + 1);
    return flags;
}

} // namespace peakon
