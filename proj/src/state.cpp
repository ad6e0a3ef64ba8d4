#include "peakon/state.hpp"

#include <cmath>
#include <limits>

namespace peakon {

void require_ordered_positions(std::span<const double> q, double min_gap) {
    if (q.empty())
        throw OutOfDomainError("positions: empty sequence");
    for (double qi : q) {
        if (!std::isfinite(qi))
            throw OutOfDomainError("positions: non-finite entry");
    }
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
        if (!(q[i] - q[i + 1] > min_gap))
            throw OutOfDomainError("positions: not strictly decreasing (gap <= " +
                                   std::to_string(min_gap) + ")");
    }
}

double min_adjacent_gap(std::span<const double> q) noexcept {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        gap = std::min(gap, q[i] - q[i + 1]);
    return gap;
}

PeakonState::PeakonState(std::vector<double> q, std::vector<double> p, double min_gap)
    : q_(std::move(q)), p_(std::move(p)) {
    if (q_.size() < 1 || q_.size() > 3)
        throw WrongArityError("PeakonState: supported peak counts are 1, 2, 3");
    if (p_.size() != q_.size())
        throw OutOfDomainError("PeakonState: q/p length mismatch");
    require_ordered_positions(q_, min_gap);
    for (double pi : p_) {
        if (!std::isfinite(pi))
            throw OutOfDomainError("PeakonState: non-finite momentum");
    }
}

double PeakonState::min_adjacent_gap() const noexcept {
    return peakon::min_adjacent_gap(q_);
}

} // namespace peakon
