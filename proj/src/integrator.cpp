#include "peakon/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "peakon/core.hpp"

namespace peakon {

namespace {

// Dormand-Prince 5(4) tableau (the system is autonomous, stage times drop out).
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// 5th-order weights equal the last tableau row (FSAL); 4th-order weights:
constexpr double kB4[7] = {5179.0 / 57600,    0.0,         7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

class Stepper {
public:
    Stepper(std::size_t n, double rel_tol, double abs_tol, double max_step)
        : n_(n), rel_(rel_tol), abs_(abs_tol), max_step_(max_step) {
        for (auto& k : k_)
            k.assign(2 * n, 0.0);
        ytmp_.assign(2 * n, 0.0);
        y4_.assign(2 * n, 0.0);
    }

    // One attempted step from (t, y); on acceptance fills y_out and the error
    // estimate used for the next step size. y layout: [q..., p...].
    bool try_step(double t, const std::vector<double>& y, double h,
                  std::vector<double>& y_out, double& err_norm) {
        (void)t; // autonomous system
        derive(y, k_[0]);
        for (int s = 1; s < 7; ++s) {
            for (std::size_t i = 0; i < y.size(); ++i) {
                double acc = 0.0;
                for (int j = 0; j < s; ++j)
                    acc += kA[s][j] * k_[static_cast<std::size_t>(j)][i];
                ytmp_[i] = y[i] + h * acc;
            }
            derive(ytmp_, k_[static_cast<std::size_t>(s)]);
        }
        // stage 7 input is already the 5th-order solution
        y_out = ytmp_;
        for (std::size_t i = 0; i < y.size(); ++i) {
            double acc4 = 0.0;
            for (int j = 0; j < 7; ++j)
                acc4 += kB4[j] * k_[static_cast<std::size_t>(j)][i];
            y4_[i] = y[i] + h * acc4;
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double scale = abs_ + rel_ * std::max(std::abs(y[i]), std::abs(y_out[i]));
            const double e = (y_out[i] - y4_[i]) / scale;
            sum += e * e;
        }
        err_norm = std::sqrt(sum / static_cast<double>(y.size()));
        return err_norm <= 1.0;
    }

    double next_h(double h, double err_norm) const {
        const double factor =
            (err_norm <= 0.0) ? 5.0
                              : std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0);
        return std::min(h * factor, max_step_);
    }

    double initial_step(const std::vector<double>& y, double horizon) const {
        std::vector<double> dy(y.size());
        derive(y, dy);
        double ny = 0.0, nd = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            ny = std::max(ny, std::abs(y[i]));
            nd = std::max(nd, std::abs(dy[i]));
        }
        const double h = 0.01 * (1.0 + ny) / (1.0 + nd);
        return std::min({h, max_step_, horizon});
    }

private:
    void derive(const std::vector<double>& y, std::vector<double>& dy) const {
        dy.resize(y.size());
        const std::span<const double> q(y.data(), n_);
        const std::span<const double> p(y.data() + n_, n_);
        eom_rhs_raw(q, p, std::span<double>(dy.data(), n_),
                    std::span<double>(dy.data() + n_, n_));
    }

    std::size_t n_;
    double rel_, abs_, max_step_;
    std::array<std::vector<double>, 7> k_;
    std::vector<double> ytmp_;
    std::vector<double> y4_;
};

double min_gap_flat(const std::vector<double>& y, std::size_t n) {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i)
        g = std::min(g, y[i] - y[i + 1]);
    return g;
}

PeakonState state_of(const std::vector<double>& y, std::size_t n) {
    return PeakonState(std::vector<double>(y.begin(), y.begin() + static_cast<long>(n)),
                       std::vector<double>(y.begin() + static_cast<long>(n), y.end()));
}

void record(Trajectory& out, double t, const std::vector<double>& y, std::size_t n) {
    PeakonState s = state_of(y, n);
    InvariantVector inv = invariants_of(s);
    out.samples.push_back(Sample{t, std::move(s), inv});
}

// Plain propagation (no events, no sampling) used by the event bisection.
// Returns false on step-size underflow.
bool propagate(Stepper& stepper, double t0, std::vector<double> y, double t1,
               std::vector<double>& y_out) {
    double t = t0;
    double h = std::min(stepper.initial_step(y, t1 - t0), t1 - t0);
    std::vector<double> ynext;
    while (t < t1) {
        bool final_step = false;
        if (t + h >= t1) {
            h = t1 - t;
            final_step = true;
        }
        double err = 0.0;
        while (!stepper.try_step(t, y, h, ynext, err)) {
            final_step = false;
            h = stepper.next_h(h, err);
            if (h < 1e-14 * std::max(1.0, std::abs(t)))
                return false;
        }
        t = final_step ? t1 : t + h;
        y = ynext;
        if (t >= t1)
            break;
        h = stepper.next_h(h, err);
        if (h < 1e-14 * std::max(1.0, std::abs(t)))
            return false;
    }
    y_out = std::move(y);
    return true;
}

} // namespace

Trajectory integrate(const PeakonState& initial, const IntegratorOptions& opts) {
    if (!(opts.rel_tol > 0.0) || !(opts.abs_tol > 0.0))
        throw OutOfDomainError("integrate: tolerances must be positive");
    if (!(opts.horizon > 0.0))
        throw OutOfDomainError("integrate: horizon must be positive");
    if (!(opts.gap_eps > 0.0))
        throw OutOfDomainError("integrate: gap_eps must be positive");
    if (!(opts.max_step > 0.0))
        throw OutOfDomainError("integrate: max_step must be positive");
    if (opts.sample_dt < 0.0)
        throw OutOfDomainError("integrate: sample_dt must be non-negative");
    const std::size_t n = static_cast<std::size_t>(initial.size());
    if (n > 1 && !(initial.min_adjacent_gap() > opts.gap_eps))
        throw OutOfDomainError("integrate: initial gap not above gap_eps");

    Trajectory out;
    std::vector<double> y(2 * n);
    std::copy(initial.q().begin(), initial.q().end(), y.begin());
    std::copy(initial.p().begin(), initial.p().end(), y.begin() + static_cast<long>(n));
    record(out, 0.0, y, n);

    Stepper stepper(n, opts.rel_tol, opts.abs_tol, opts.max_step);
    double t = 0.0;
    double h = stepper.initial_step(y, opts.horizon);
    long sample_index = 1;
    std::vector<double> ynext;

    while (t < opts.horizon) {
        // Land exactly on the next output boundary (sample grid or horizon).
        double t_limit = opts.horizon;
        if (opts.sample_dt > 0.0)
            t_limit = std::min(t_limit, static_cast<double>(sample_index) * opts.sample_dt);
        bool hit_limit = false;
        if (t + h >= t_limit) {
            h = t_limit - t;
            hit_limit = true;
        }

        double err = 0.0;
        while (!stepper.try_step(t, y, h, ynext, err)) {
            hit_limit = false;
            h = stepper.next_h(h, err);
            if (h < 1e-14 * std::max(1.0, std::abs(t))) {
                out.status = RunStatus::StepFailure;
                return out;
            }
        }
        const double t_new = hit_limit ? t_limit : t + h;

        // Ordering resolution lost: the gap collapsed to (or through) exact
        // zero in doubles before any event threshold could catch it.
        if (n > 1 && !(min_gap_flat(ynext, n) > 0.0)) {
            out.status = RunStatus::StepFailure;
            return out;
        }

        if (n > 1 && min_gap_flat(ynext, n) <= opts.gap_eps) {
            // Bracketed crossing of the collision threshold in [t, t_new].
            double t_lo = t, t_hi = t_new;
            std::vector<double> y_lo = y, y_hi = ynext;
            const double width_goal = 1e-9 * std::max(1.0, t_hi);
            while (t_hi - t_lo > width_goal) {
                const double t_mid = 0.5 * (t_lo + t_hi);
                std::vector<double> y_mid;
                if (!propagate(stepper, t_lo, y_lo, t_mid, y_mid)) {
                    out.status = RunStatus::StepFailure;
                    return out;
                }
                if (min_gap_flat(y_mid, n) <= opts.gap_eps) {
                    t_hi = t_mid;
                    y_hi = std::move(y_mid);
                } else {
                    t_lo = t_mid;
                    y_lo = std::move(y_mid);
                }
            }
            CollisionEvent ev;
            ev.t_lo = t_lo;
            ev.t_hi = t_hi;
            double worst = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const double gap = y_hi[i] - y_hi[i + 1];
                if (gap < worst) {
                    worst = gap;
                    ev.pair = static_cast<int>(i) + 1;
                }
            }
            ev.point.assign(y_hi.begin(), y_hi.begin() + static_cast<long>(n));
            out.events.push_back(std::move(ev));
            record(out, t_hi, y_hi, n);
            out.status = RunStatus::CollisionStop;
            return out;
        }

        t = t_new;
        y = ynext;
        const bool on_sample_grid =
            opts.sample_dt > 0.0 &&
            t == static_cast<double>(sample_index) * opts.sample_dt;
        if (on_sample_grid) {
            record(out, t, y, n);
            ++sample_index;
        } else if (opts.sample_dt == 0.0) {
            record(out, t, y, n);
        }
        if (t >= opts.horizon) {
            if (out.samples.back().t != t)
                record(out, t, y, n);
            out.status = RunStatus::ReachedHorizon;
            return out;
        }
        h = stepper.next_h(h, err);
        if (h < 1e-14 * std::max(1.0, std::abs(t))) {
            out.status = RunStatus::StepFailure;
            return out;
        }
    }
    out.status = RunStatus::ReachedHorizon;
    return out;
}

PeakonState exp_map(std::span<const double> q0, const TangentVector& v, double t) {
    if (!std::isfinite(t))
        throw OutOfDomainError("exp_map: non-finite time");
    const Covector p0 = momentum_from_velocity(q0, v);
    std::vector<double> q(q0.begin(), q0.end());
    if (t == 0.0)
        return PeakonState(std::move(q), p0.components);
    bool zero_velocity = true;
    for (double c : v.components)
        if (c != 0.0)
            zero_velocity = false;
    if (zero_velocity)
        return PeakonState(std::move(q), p0.components);

    // Negative times run the reversed flow: integrate (q0, -p0) and flip the
    // final momentum back.
    const bool reversed = t < 0.0;
    std::vector<double> p = p0.components;
    if (reversed)
        for (double& pi : p)
            pi = -pi;
    IntegratorOptions opts;
    opts.horizon = std::abs(t);
    opts.sample_dt = 0.0;
    const Trajectory run = integrate(PeakonState(std::move(q), std::move(p)), opts);
    if (run.status == RunStatus::CollisionStop)
        throw GeodesicLeftDomainError("exp_map: geodesic reached the collision threshold", run);
    if (run.status == RunStatus::StepFailure)
        throw GeodesicLeftDomainError("exp_map: step size underflow", run);
    PeakonState end = run.final_state();
    if (!reversed)
        return end;
    std::vector<double> pf = end.p();
    for (double& pi : pf)
        pi = -pi;
    return PeakonState(end.q(), std::move(pf));
}

DriftReport invariant_drift(const Trajectory& trajectory) {
    std::vector<InvariantVector> records;
    records.reserve(trajectory.samples.size());
    for (const Sample& s : trajectory.samples)
        records.push_back(s.invariants);
    return invariant_drift(std::span<const InvariantVector>(records));
}

} // namespace peakon
