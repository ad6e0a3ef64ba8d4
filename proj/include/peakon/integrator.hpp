#ifndef PEAKON_INTEGRATOR_HPP
#define PEAKON_INTEGRATOR_HPP

#include <vector>

#include "peakon/invariants.hpp"
#include "peakon/state.hpp"

namespace peakon {

struct IntegratorOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double horizon = 0.0;  // required, > 0
    double gap_eps = 1e-6; // collision threshold on the smallest adjacent gap
    double max_step = 0.5;
    // Output cadence. Positive: the stepper lands exactly on multiples of
    // sample_dt, so recorded states carry full integration accuracy.
    // Zero: every accepted step is recorded.
    double sample_dt = 0.0;
};

struct CollisionEvent {
    double t_lo = 0.0;
    double t_hi = 0.0;
    int pair = 0; // lower 1-based index i of the colliding pair (i, i+1)
    std::vector<double> point;
};

enum class RunStatus { ReachedHorizon, CollisionStop, StepFailure };

struct Sample {
    double t;
    PeakonState state;
    InvariantVector invariants;
};

struct Trajectory {
    std::vector<Sample> samples;
    std::vector<CollisionEvent> events;
    RunStatus status = RunStatus::ReachedHorizon;

    double final_time() const { return samples.back().t; }
    const PeakonState& final_state() const { return samples.back().state; }
};

/// Integrates the peakon equations of motion with an embedded
/// Dormand-Prince 5(4) pair, stopping at the first collision event (smallest
/// adjacent gap reaching gap_eps, root located by bisecting with
/// re-integration) or at the horizon. Deterministic: identical inputs give
/// bitwise-identical trajectories.
Trajectory integrate(const PeakonState& initial, const IntegratorOptions& opts);

struct GeodesicLeftDomainError : Error {
    GeodesicLeftDomainError(const std::string& what, Trajectory partial_run)
        : Error(what), partial(std::move(partial_run)) {}
    Trajectory partial;
};

/// Geodesic exponential map: follows the geodesic leaving q0 with velocity v
/// for time t and returns the phase-space endpoint. Throws
/// GeodesicLeftDomainError (carrying the partial trajectory) if the geodesic
/// reaches the collision threshold first.
PeakonState exp_map(std::span<const double> q0, const TangentVector& v, double t);

DriftReport invariant_drift(const Trajectory& trajectory);

} // namespace peakon

#endif
