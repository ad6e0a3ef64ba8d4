#ifndef PEAKON_COLLISION_HPP
#define PEAKON_COLLISION_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "peakon/state.hpp"

namespace peakon {

enum class Outcome { Collides, Escapes, PossibleCollision };

std::string to_string(Outcome o);

/// Collision prediction with the quantities the classification rests on.
/// For two peaks the law is an iff, so the outcome is never
/// PossibleCollision; for three peaks only exclusion is proven and the
/// remaining states report PossibleCollision honestly.
struct Verdict {
    Outcome outcome = Outcome::Escapes;
    std::optional<double> bound_time;   // t*, set iff Collides (n = 2)
    std::optional<int> condition_fired; // 1 or 2, set for PossibleCollision (n = 3)
    double h = 0.0;                     // p1 - p2
    double a_sq = 0.0;                  // 4 H1 - H0^2
    double hhat = 0.0;
    std::vector<int> signs; // sign(p_i)
};

enum class SectorLabel { I, II, III, IV };

std::string to_string(SectorLabel s);

/// Leaf coordinates of the two foliations of the twopeakon half-plane:
/// (e^{q1} - e^{q2}, e^{-q1} - e^{-q2}). The first is constant along
/// geodesics with p1 = 0, the second along geodesics with p2 = 0.
std::pair<double, double> foliation_invariants_2d(std::span<const double> q);

/// Momentum-sign sector of a twopeakon: I when p1 < 0 < p2 (facing the
/// collision line), IV mirrored, II both positive (drifting right),
/// III both negative. OnBoundaryError when a momentum vanishes.
SectorLabel classify_sector_2d(const PeakonState& state);

/// Upper bound on the collision time of a Sector-I twopeakon:
///   t* = 2 sqrt(1 - y0) / (y0 sqrt((1 + y0)(2 H1 - H0^2))),
/// y0 = e^{q2 - q1}. NotCollidingError outside Sector I; DegenerateError when
/// 2 H1 - H0^2 is numerically zero.
double collision_bound_2d(const PeakonState& state);

/// Two-peak verdict: Collides (with t*) iff p2 > 0 > p1, Escapes otherwise.
Verdict predict_2d(const PeakonState& state);

/// Three-peak verdict from the necessary conditions p1 < 0 < p2 or
/// p2 < 0 < p3: PossibleCollision when one fires, Escapes when neither does.
Verdict necessary_3d(const PeakonState& state);

/// The one-form annihilating the middle-momentum distribution at q (n = 3):
///   alpha = (e^{-(q1-q2)} - e^{-(q1+q2-2q3)}) dq1
///         - (1 - e^{-2(q1-q3)}) dq2
///         + (e^{-(q2-q3)} - e^{-(2q1-q2-q3)}) dq3
Covector alpha_form_3d(std::span<const double> q);

/// Analytic entries (d_i alpha_j - d_j alpha_i) of d(alpha) for the form
/// above, ordered (12, 13, 23).
std::array<double, 3> alpha_exterior_derivative_3d(std::span<const double> q);

/// Coefficient of d(alpha) ^ alpha against dq1 ^ dq2 ^ dq3; nonzero on the
/// ordered domain (the distribution is not integrable).
double integrability_defect_3d(std::span<const double> q);

/// Same defect for the one-form annihilating the p1 = 0 distribution
/// (dq1 - e^{-(q1-q2)} dq2), evaluated through the finite-difference path;
/// vanishes identically (that distribution is integrable).
double integrability_defect_d1_3d(std::span<const double> q, double step = 1e-6);

/// Finite-difference defect of an arbitrary covector field at q; validation
/// oracle for the analytic exterior derivative.
template <typename FormField>
double integrability_defect_fd(const FormField& form, std::span<const double> q,
                               double step = 1e-6) {
    std::vector<double> qs(q.begin(), q.end());
    std::array<std::array<double, 3>, 3> dalpha{}; // dalpha[i][j] = d_i alpha_j
    for (int i = 0; i < 3; ++i) {
        qs[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)] + step;
        const Covector ap = form(std::span<const double>(qs));
        qs[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)] - step;
        const Covector am = form(std::span<const double>(qs));
        qs[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)];
        for (int j = 0; j < 3; ++j)
            dalpha[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (ap.components[static_cast<std::size_t>(j)] -
                 am.components[static_cast<std::size_t>(j)]) /
                (2.0 * step);
    }
    const Covector a = form(q);
    const double d12 = dalpha[0][1] - dalpha[1][0];
    const double d13 = dalpha[0][2] - dalpha[2][0];
    const double d23 = dalpha[1][2] - dalpha[2][1];
    return d12 * a.components[2] - d13 * a.components[1] + d23 * a.components[0];
}

/// Indices i (1-based) with |p_i| <= tol: the directions along which the
/// state is horizontal to the corresponding distribution.
std::set<int> distribution_flag(const PeakonState& state, double tol = 1e-12);

} // namespace peakon

#endif
