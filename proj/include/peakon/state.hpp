#ifndef PEAKON_STATE_HPP
#define PEAKON_STATE_HPP

#include <span>
#include <vector>

#include "peakon/errors.hpp"

namespace peakon {

/// Phase-space point of an n-peakon: peak positions q (strictly decreasing,
/// q1 > q2 > ... > qn) and peak momenta p. Immutable after construction.
class PeakonState {
public:
    // min_gap configures the smallest admissible adjacent gap; the default 0
    // enforces strict ordering only. Throws OutOfDomainError on violation,
    // WrongArityError unless n is 1, 2 or 3.
    PeakonState(std::vector<double> q, std::vector<double> p, double min_gap = 0.0);

    int size() const noexcept { return static_cast<int>(q_.size()); }
    const std::vector<double>& q() const noexcept { return q_; }
    const std::vector<double>& p() const noexcept { return p_; }

    // Smallest q_i - q_{i+1}; +inf for a single peak.
    double min_adjacent_gap() const noexcept;

private:
    std::vector<double> q_;
    std::vector<double> p_;
};

/// Contravariant vector (velocity-like) paired with a position.
struct TangentVector {
    std::vector<double> components;
};

/// Covariant vector (momentum-like) paired with a position.
struct Covector {
    std::vector<double> components;
};

// Validation helper shared by the free operations: throws OutOfDomainError
// unless q is finite and strictly decreasing with gaps > min_gap.
void require_ordered_positions(std::span<const double> q, double min_gap = 0.0);

double min_adjacent_gap(std::span<const double> q) noexcept;

} // namespace peakon

#endif
