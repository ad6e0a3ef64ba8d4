#include "peakon/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "peakon/state.hpp"

namespace peakon {

SmallMatrix SmallMatrix::identity(int n) {
    SmallMatrix m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

bool SmallMatrix::is_symmetric() const noexcept {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (a_[idx(i, j)] != a_[idx(j, i)])
                return false;
    return true;
}

std::vector<double> SmallMatrix::multiply(std::span<const double> x) const {
    std::vector<double> y(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j)
            s += a_[idx(i, j)] * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

double SmallMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : a_)
        m = std::max(m, std::abs(v));
    return m;
}

namespace {

// Gauss-Jordan with partial pivoting in long double on an augmented system.
// cols_rhs right-hand sides live to the right of the n x n block.
void eliminate(std::vector<long double>& w, int n, int cols) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        long double best = std::abs(w[static_cast<std::size_t>(col) * cols + col]);
        for (int r = col + 1; r < n; ++r) {
            long double v = std::abs(w[static_cast<std::size_t>(r) * cols + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (!(best > 0.0L))
            throw SingularMatrixError("solve: zero pivot");
        if (piv != col)
            for (int c = 0; c < cols; ++c)
                std::swap(w[static_cast<std::size_t>(piv) * cols + c],
                          w[static_cast<std::size_t>(col) * cols + c]);
        const long double d = w[static_cast<std::size_t>(col) * cols + col];
        for (int c = col; c < cols; ++c)
            w[static_cast<std::size_t>(col) * cols + c] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const long double f = w[static_cast<std::size_t>(r) * cols + col];
            if (f == 0.0L)
                continue;
            for (int c = col; c < cols; ++c)
                w[static_cast<std::size_t>(r) * cols + c] -=
                    f * w[static_cast<std::size_t>(col) * cols + c];
        }
    }
}

} // namespace

std::vector<double> SmallMatrix::solve(std::span<const double> b) const {
    const int n = n_;
    const int cols = n + 1;
    std::vector<long double> w(static_cast<std::size_t>(n) * cols, 0.0L);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            w[static_cast<std::size_t>(i) * cols + j] = a_[idx(i, j)];
        w[static_cast<std::size_t>(i) * cols + n] = b[static_cast<std::size_t>(i)];
    }
    eliminate(w, n, cols);
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<std::size_t>(i)] =
            static_cast<double>(w[static_cast<std::size_t>(i) * cols + n]);
    return x;
}

SmallMatrix SmallMatrix::inverse() const {
    const int n = n_;
    const int cols = 2 * n;
    std::vector<long double> w(static_cast<std::size_t>(n) * cols, 0.0L);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            w[static_cast<std::size_t>(i) * cols + j] = a_[idx(i, j)];
        w[static_cast<std::size_t>(i) * cols + n + i] = 1.0L;
    }
    eliminate(w, n, cols);
    SmallMatrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = static_cast<double>(w[static_cast<std::size_t>(i) * cols + n + j]);
    return inv;
}

SmallMatrix e_matrix(std::span<const double> q) {
    require_ordered_positions(q);
    const int n = static_cast<int>(q.size());
    SmallMatrix e(n);
    for (int i = 0; i < n; ++i) {
        e(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j)
            e.set_sym(i, j, std::exp(-(q[static_cast<std::size_t>(i)] -
                                       q[static_cast<std::size_t>(j)])));
    }
    return e;
}

double metric_residual(const SmallMatrix& g, const SmallMatrix& e) {
    const int n = g.size();
    long double worst = 0.0L;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            long double s = (i == j) ? -1.0L : 0.0L;
            for (int k = 0; k < n; ++k)
                s += static_cast<long double>(g(i, k)) * static_cast<long double>(e(k, j));
            worst = std::max(worst, std::abs(s));
        }
    }
    return static_cast<double>(worst);
}

namespace {

SmallMatrix metric_closed_form(std::span<const double> q) {
    const int n = static_cast<int>(q.size());
    SmallMatrix g(n);
    if (n == 1) {
        g(0, 0) = 1.0;
        return g;
    }
    if (n == 2) {
        const double y = std::exp(-(q[0] - q[1]));
        const double d = (1.0 - y) * (1.0 + y); // 1 - y^2
        g(0, 0) = 1.0 / d;
        g(1, 1) = 1.0 / d;
        g.set_sym(0, 1, -y / d);
        return g;
    }
    // n == 3, tridiagonal inverse of the Gram matrix
    const double y1 = std::exp(-(q[0] - q[1]));
    const double y2 = std::exp(-(q[1] - q[2]));
    const double d1 = (1.0 - y1) * (1.0 + y1);
    const double d2 = (1.0 - y2) * (1.0 + y2);
    const double y12 = y1 * y2;
    g(0, 0) = 1.0 / d1;
    g.set_sym(0, 1, -y1 / d1);
    g.set_sym(0, 2, 0.0);
    g(1, 1) = (1.0 - y12 * y12) / (d1 * d2);
    g.set_sym(1, 2, -y2 / d2);
    g(2, 2) = 1.0 / d2;
    return g;
}

} // namespace

SmallMatrix metric_matrix(std::span<const double> q) {
    const SmallMatrix e = e_matrix(q);
    const int n = e.size();
    SmallMatrix g = (n <= 3) ? metric_closed_form(q) : e.inverse();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!std::isfinite(g(i, j)))
                throw SingularMatrixError("metric_matrix: non-finite inverse entry");
    // A double-rounded inverse cannot beat |g*E - I| ~ eps * |g|, so the
    // guard scales with |g|; it trips only on genuine breakdown.
    const double tol = 1e-12 * std::max(1.0, g.max_abs());
    if (metric_residual(g, e) > tol)
        throw SingularMatrixError("metric_matrix: residual check failed (too close to a collision)");
    return g;
}

SmallMatrix cholesky(const SmallMatrix& b) {
    const int n = b.size();
    SmallMatrix l(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = b(i, j);
            for (int k = 0; k < j; ++k)
                s -= l(i, k) * l(j, k);
            if (i == j) {
                if (!(s > 0.0))
                    throw NotPositiveDefiniteError("cholesky: non-positive pivot");
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

SymmetricEigen symmetric_eigen(const SmallMatrix& a) {
    const int n = a.size();
    SmallMatrix d = a;
    SmallMatrix v = SmallMatrix::identity(n);
    // Cyclic Jacobi; converges fast for the tiny matrices used here.
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                off += d(i, j) * d(i, j);
        if (off < 1e-300)
            break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(d(p, q)) <= 1e-18 * (std::abs(d(p, p)) + std::abs(d(q, q))))
                    continue;
                const double theta = 0.5 * std::atan2(2.0 * d(p, q), d(q, q) - d(p, p));
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                for (int k = 0; k < n; ++k) {
                    const double dkp = d(k, p), dkq = d(k, q);
                    d(k, p) = c * dkp - s * dkq;
                    d(k, q) = s * dkp + c * dkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double dpk = d(p, k), dqk = d(q, k);
                    d(p, k) = c * dpk - s * dqk;
                    d(q, k) = s * dpk + c * dqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return d(x, x) < d(y, y); });
    SymmetricEigen out{std::vector<double>(static_cast<std::size_t>(n)), SmallMatrix(n)};
    for (int c = 0; c < n; ++c) {
        const int src = order[static_cast<std::size_t>(c)];
        out.values[static_cast<std::size_t>(c)] = d(src, src);
        for (int r = 0; r < n; ++r)
            out.vectors(r, c) = v(r, src);
    }
    return out;
}

} // namespace peakon
