#include "peakon/geometry.hpp"

#include <cmath>

namespace peakon {

namespace {

void require_arity(std::span<const double> q, int n, const char* what) {
    if (static_cast<int>(q.size()) != n)
        throw WrongArityError(std::string(what) + ": wrong peak count");
}

} // namespace

double gauss_curvature_2d(std::span<const double> q) {
    require_arity(q, 2, "gauss_curvature_2d");
    require_ordered_positions(q);
    const double u = std::exp(-(q[0] - q[1]));
    const double opu = 1.0 + u;
    return (u - 2.0 * u * u) / (opu * opu);
}

// ---------------------------------------------------------------------------
// Finite-difference machinery. All of it works on a linear-solve inverse of
// the Gram matrix in extended precision, so it shares nothing with the
// closed-form metric or curvature expressions it is used to check.

namespace {

constexpr int kMaxN = 3;

struct MatLD {
    int n = 0;
    std::array<long double, kMaxN * kMaxN> a{};

    long double at(int i, int j) const noexcept {
        return a[static_cast<std::size_t>(i * kMaxN + j)];
    }
    long double& at(int i, int j) noexcept {
        return a[static_cast<std::size_t>(i * kMaxN + j)];
    }
};

MatLD e_matrix_ld(std::span<const long double> q) {
    const int n = static_cast<int>(q.size());
    MatLD e;
    e.n = n;
    for (int i = 0; i < n; ++i) {
        e.at(i, i) = 1.0L;
        for (int j = i + 1; j < n; ++j) {
            const long double w = expl(-(q[static_cast<std::size_t>(i)] -
                                         q[static_cast<std::size_t>(j)]));
            e.at(i, j) = w;
            e.at(j, i) = w;
        }
    }
    return e;
}

// Inverse by Gauss-Jordan with partial pivoting.
MatLD invert_ld(const MatLD& m) {
    const int n = m.n;
    long double w[kMaxN][2 * kMaxN] = {};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            w[i][j] = m.at(i, j);
        w[i][n + i] = 1.0L;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(w[r][col]) > std::abs(w[piv][col]))
                piv = r;
        if (w[piv][col] == 0.0L)
            throw SingularMatrixError("fd metric: singular Gram matrix");
        if (piv != col)
            for (int c = 0; c < 2 * n; ++c)
                std::swap(w[piv][c], w[col][c]);
        const long double d = w[col][col];
        for (int c = 0; c < 2 * n; ++c)
            w[col][c] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col || w[r][col] == 0.0L)
                continue;
            const long double f = w[r][col];
            for (int c = 0; c < 2 * n; ++c)
                w[r][c] -= f * w[col][c];
        }
    }
    MatLD inv;
    inv.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = w[i][n + j];
    return inv;
}

MatLD metric_ld(std::span<const long double> q) {
    return invert_ld(e_matrix_ld(q));
}

using Vec3LD = std::array<long double, kMaxN>;

Vec3LD shifted(std::span<const long double> q, int k, long double dq) {
    Vec3LD s{};
    for (std::size_t i = 0; i < q.size(); ++i)
        s[i] = q[i];
    s[static_cast<std::size_t>(k)] += dq;
    return s;
}

// d(metric)/dq_k by a Richardson-extrapolated central difference.
MatLD metric_derivative_ld(std::span<const long double> q, int k, long double h) {
    const int n = static_cast<int>(q.size());
    const auto diff = [&](long double hh) {
        const Vec3LD qp = shifted(q, k, hh);
        const Vec3LD qm = shifted(q, k, -hh);
        const MatLD gp = metric_ld(std::span<const long double>(qp.data(), q.size()));
        const MatLD gm = metric_ld(std::span<const long double>(qm.data(), q.size()));
        MatLD d;
        d.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d.at(i, j) = (gp.at(i, j) - gm.at(i, j)) / (2.0L * hh);
        return d;
    };
    const MatLD dh = diff(h);
    const MatLD dh2 = diff(h / 2.0L);
    MatLD r;
    r.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.at(i, j) = (4.0L * dh2.at(i, j) - dh.at(i, j)) / 3.0L;
    return r;
}

struct GammaLD {
    int n = 0;
    long double g[kMaxN][kMaxN][kMaxN] = {}; // [k][i][j]
};

// Gamma^k_ij = 1/2 sum_r g^{kr} (d_i g_jr + d_j g_ir - d_r g_ij); the inverse
// metric is the Gram matrix itself.
GammaLD christoffel_ld(std::span<const long double> q, long double h) {
    const int n = static_cast<int>(q.size());
    MatLD dg[kMaxN];
    for (int k = 0; k < n; ++k)
        dg[k] = metric_derivative_ld(q, k, h);
    const MatLD e = e_matrix_ld(q);
    GammaLD out;
    out.n = n;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long double s = 0.0L;
                for (int r = 0; r < n; ++r)
                    s += e.at(k, r) *
                         (dg[i].at(j, r) + dg[j].at(i, r) - dg[r].at(i, j));
                out.g[k][i][j] = 0.5L * s;
                out.g[k][j][i] = out.g[k][i][j];
            }
    return out;
}

// d(Gamma)/dq_c, Richardson again; the inner Christoffel evaluations reuse
// the same base step.
GammaLD christoffel_derivative_ld(std::span<const long double> q, int c, long double h) {
    const int n = static_cast<int>(q.size());
    const auto diff = [&](long double hh) {
        const Vec3LD qp = shifted(q, c, hh);
        const Vec3LD qm = shifted(q, c, -hh);
        const GammaLD gp = christoffel_ld(std::span<const long double>(qp.data(), q.size()), h);
        const GammaLD gm = christoffel_ld(std::span<const long double>(qm.data(), q.size()), h);
        GammaLD d;
        d.n = n;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    d.g[k][i][j] = (gp.g[k][i][j] - gm.g[k][i][j]) / (2.0L * hh);
        return d;
    };
    const GammaLD dh = diff(h);
    const GammaLD dh2 = diff(h / 2.0L);
    GammaLD r;
    r.n = n;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r.g[k][i][j] = (4.0L * dh2.g[k][i][j] - dh.g[k][i][j]) / 3.0L;
    return r;
}

double resolve_fd_step(std::span<const double> q, double step, double floor_gap,
                       const char* what) {
    require_ordered_positions(q);
    const double gap = min_adjacent_gap(q);
    if (gap < floor_gap)
        throw StepTooLargeError(std::string(what) + ": gaps too small for the difference stencil");
    double h = step;
    if (h <= 0.0)
        h = std::min(5e-3, gap / 10.0);
    if (gap < 10.0 * h)
        throw StepTooLargeError(std::string(what) + ": step exceeds a tenth of the smallest gap");
    return h;
}

// Covariant R_ijkl (0-based) from the FD Christoffel data:
//   R^m_jkl = d_k Gamma^m_lj - d_l Gamma^m_kj
//           + sum_s (Gamma^m_ks Gamma^s_lj - Gamma^m_ls Gamma^s_kj)
//   R_ijkl = sum_m g_im R^m_jkl
RiemannRaw riemann_raw_ld(std::span<const double> q, double h) {
    const int n = static_cast<int>(q.size());
    Vec3LD ql{};
    for (std::size_t i = 0; i < q.size(); ++i)
        ql[i] = q[i];
    const std::span<const long double> qs(ql.data(), q.size());

    const GammaLD gamma = christoffel_ld(qs, h);
    GammaLD dgamma[kMaxN];
    for (int c = 0; c < n; ++c)
        dgamma[c] = christoffel_derivative_ld(qs, c, h);
    const MatLD g = metric_ld(qs);

    RiemannRaw out;
    out.n = n;
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                long double up[kMaxN];
                for (int m = 0; m < n; ++m) {
                    long double s = dgamma[k].g[m][l][j] - dgamma[l].g[m][k][j];
                    for (int t = 0; t < n; ++t)
                        s += gamma.g[m][k][t] * gamma.g[t][l][j] -
                             gamma.g[m][l][t] * gamma.g[t][k][j];
                    up[m] = s;
                }
                for (int i = 0; i < n; ++i) {
                    long double s = 0.0L;
                    for (int m = 0; m < n; ++m)
                        s += g.at(i, m) * up[m];
                    out.r[static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l)] =
                        static_cast<double>(s);
                }
            }
    return out;
}

} // namespace

ChristoffelSymbols christoffel_fd(std::span<const double> q, double step) {
    require_ordered_positions(q);
    const int n = static_cast<int>(q.size());
    if (n > 3)
        throw WrongArityError("christoffel_fd: supported peak counts are 1, 2, 3");
    if (!(step > 0.0))
        throw OutOfDomainError("christoffel_fd: step must be positive");
    if (n > 1 && min_adjacent_gap(q) < 10.0 * step)
        throw StepTooLargeError("christoffel_fd: step exceeds a tenth of the smallest gap");

    ChristoffelSymbols out;
    out.n = n;
    if (n == 1)
        return out; // flat line, all symbols vanish

    std::vector<double> qs(q.begin(), q.end());
    std::array<SmallMatrix, 3> dg{SmallMatrix(n), SmallMatrix(n), SmallMatrix(n)};
    for (int k = 0; k < n; ++k) {
        qs[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k)] + step;
        const SmallMatrix gp = metric_matrix(qs);
        qs[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k)] - step;
        const SmallMatrix gm = metric_matrix(qs);
        qs[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dg[static_cast<std::size_t>(k)](i, j) = (gp(i, j) - gm(i, j)) / (2.0 * step);
    }
    const SmallMatrix e = e_matrix(q);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int r = 0; r < n; ++r)
                    s += e(k, r) * (dg[static_cast<std::size_t>(i)](j, r) +
                                    dg[static_cast<std::size_t>(j)](i, r) -
                                    dg[static_cast<std::size_t>(r)](i, j));
                const double val = 0.5 * s;
                out.gamma[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(j)] = val;
                out.gamma[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]
                         [static_cast<std::size_t>(i)] = val;
            }
    return out;
}

double RiemannComponents3D::component(int i, int j, int k, int l) const {
    if (i == j || k == l)
        return 0.0;
    double sign = 1.0;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (k > l) {
        std::swap(k, l);
        sign = -sign;
    }
    // pair exchange is symmetric
    if (std::make_pair(i, j) > std::make_pair(k, l)) {
        std::swap(i, k);
        std::swap(j, l);
    }
    if (i == 1 && j == 2 && k == 1 && l == 2)
        return sign * r1212;
    if (i == 1 && j == 2 && k == 1 && l == 3)
        return sign * r1213;
    if (i == 1 && j == 2 && k == 2 && l == 3)
        return sign * r1223;
    if (i == 1 && j == 3 && k == 1 && l == 3)
        return sign * r1313;
    if (i == 1 && j == 3 && k == 2 && l == 3)
        return sign * r1323;
    return sign * r2323; // (2,3,2,3)
}

namespace {

struct QForms {
    double q1212, q2323, q1313, q1213, q1223, q1323;
    double delta3;
};

QForms q_forms(double u, double v) {
    QForms f{};
    f.delta3 = (1.0 + u) * (1.0 + v);
    f.q1212 = u *
              (3.0 * u * v * v * v + 2.0 * u * v * v - 2.0 * u * v - 2.0 * u -
               v * v + v + 1.0) /
              ((1.0 + u) * f.delta3);
    f.q2323 = v *
              (3.0 * u * u * u * v + 2.0 * u * u * v - 2.0 * u * v - 2.0 * v -
               u * u + u + 1.0) /
              ((1.0 + v) * f.delta3);
    f.q1313 = u * v / f.delta3;
    f.q1213 = -u * v * v / f.delta3;
    f.q1223 = u * u * v * v / f.delta3;
    f.q1323 = -u * u * v / f.delta3;
    return f;
}

void require_3d_point(std::span<const double> q, const char* what) {
    require_arity(q, 3, what);
    require_ordered_positions(q);
    for (double qi : q)
        if (std::abs(qi) > 300.0)
            throw OverflowError(std::string(what) + ": |q_i| > 300");
}

} // namespace

RiemannComponents3D riemann_3d(std::span<const double> q) {
    require_3d_point(q, "riemann_3d");
    const double u = std::exp(q[1] - q[0]);
    const double v = std::exp(q[2] - q[1]);
    const QForms f = q_forms(u, v);
    // R_ijkl = Q_ijkl / ((1-u^2)(1-v^2))
    const double scale = 1.0 / ((1.0 - u) * (1.0 + u) * (1.0 - v) * (1.0 + v));
    RiemannComponents3D r;
    r.r1212 = f.q1212 * scale;
    r.r2323 = f.q2323 * scale;
    r.r1313 = f.q1313 * scale;
    r.r1213 = f.q1213 * scale;
    r.r1223 = f.q1223 * scale;
    r.r1323 = f.q1323 * scale;
    return r;
}

RiemannRaw riemann_fd_raw(std::span<const double> q, double step) {
    const int n = static_cast<int>(q.size());
    if (n != 2 && n != 3)
        throw WrongArityError("riemann_fd: needs n in {2, 3}");
    const double h = resolve_fd_step(q, step, 1e-3, "riemann_fd");
    return riemann_raw_ld(q, h);
}

RiemannComponents3D riemann_fd(std::span<const double> q, double step) {
    require_arity(q, 3, "riemann_fd");
    const RiemannRaw raw = riemann_fd_raw(q, step);
    RiemannComponents3D r;
    r.r1212 = raw.at(0, 1, 0, 1);
    r.r2323 = raw.at(1, 2, 1, 2);
    r.r1313 = raw.at(0, 2, 0, 2);
    r.r1213 = raw.at(0, 1, 0, 2);
    r.r1223 = raw.at(0, 1, 1, 2);
    r.r1323 = raw.at(0, 2, 1, 2);
    return r;
}

double gauss_curvature_fd_2d(std::span<const double> q, double step) {
    require_arity(q, 2, "gauss_curvature_fd_2d");
    const RiemannRaw raw = riemann_fd_raw(q, step);
    const double r1212 = raw.at(0, 1, 0, 1);
    const SmallMatrix g = metric_matrix(q);
    const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    return r1212 / det;
}

SmallMatrix q_form_3d(std::span<const double> q) {
    require_3d_point(q, "q_form_3d");
    const double u = std::exp(q[1] - q[0]);
    const double v = std::exp(q[2] - q[1]);
    const QForms f = q_forms(u, v);
    SmallMatrix m(3);
    m(0, 0) = f.q2323;
    m(1, 1) = f.q1313;
    m(2, 2) = f.q1212;
    m.set_sym(0, 1, -f.q1323);
    m.set_sym(0, 2, f.q1223);
    m.set_sym(1, 2, -f.q1213);
    return m;
}

double sectional_curvature_3d(std::span<const double> q, const TangentVector& a,
                              const TangentVector& b) {
    require_3d_point(q, "sectional_curvature_3d");
    if (a.components.size() != 3 || b.components.size() != 3)
        throw WrongArityError("sectional_curvature_3d: spanning vectors must have 3 components");
    const auto& av = a.components;
    const auto& bv = b.components;
    std::array<double, 3> z{av[1] * bv[2] - av[2] * bv[1],
                            av[2] * bv[0] - av[0] * bv[2],
                            av[0] * bv[1] - av[1] * bv[0]};
    const double norm = std::sqrt(z[0] * z[0] + z[1] * z[1] + z[2] * z[2]);
    if (norm < 1e-12)
        throw DegeneratePlaneError("sectional_curvature_3d: spanning vectors are dependent");
    for (double& c : z)
        c /= norm;
    const SmallMatrix qf = q_form_3d(q);
    const SmallMatrix e = e_matrix(q);
    const std::vector<double> qz = qf.multiply(z);
    const std::vector<double> ez = e.multiply(z);
    double num = 0.0;
    double den = 0.0;
    for (int i = 0; i < 3; ++i) {
        num += qz[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
        den += ez[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
    }
    return num / den;
}

namespace {

std::array<double, 3> cross(const std::array<double, 3>& x, const std::array<double, 3>& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
            x[0] * y[1] - x[1] * y[0]};
}

double norm3(const std::array<double, 3>& x) {
    return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

// Unit null vector of a (near-)singular symmetric 3x3 matrix: best cross
// product of two rows, with fallbacks for lower rank.
std::array<double, 3> null_vector(const SmallMatrix& m) {
    std::array<std::array<double, 3>, 3> rows;
    for (int i = 0; i < 3; ++i)
        rows[static_cast<std::size_t>(i)] = {m(i, 0), m(i, 1), m(i, 2)};
    std::array<double, 3> best{0.0, 0.0, 0.0};
    double best_norm = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const std::array<double, 3> c = cross(rows[static_cast<std::size_t>(i)],
                                                  rows[static_cast<std::size_t>(j)]);
            const double nc = norm3(c);
            if (nc > best_norm) {
                best_norm = nc;
                best = c;
            }
        }
    double row_scale = 0.0;
    for (const auto& r : rows)
        row_scale = std::max(row_scale, norm3(r));
    if (best_norm > 1e-10 * std::max(row_scale * row_scale, 1e-300)) {
        for (double& c : best)
            c /= best_norm;
        return best;
    }
    // rank <= 1: anything orthogonal to the largest row works
    std::array<double, 3> w = rows[0];
    for (const auto& r : rows)
        if (norm3(r) > norm3(w))
            w = r;
    if (norm3(w) < 1e-300)
        return {1.0, 0.0, 0.0};
    int least = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(w[static_cast<std::size_t>(k)]) < std::abs(w[static_cast<std::size_t>(least)]))
            least = k;
    std::array<double, 3> ek{0.0, 0.0, 0.0};
    ek[static_cast<std::size_t>(least)] = 1.0;
    std::array<double, 3> x = cross(w, ek);
    const double nx = norm3(x);
    for (double& c : x)
        c /= nx;
    return x;
}

} // namespace

std::array<double, 3> curvature_eigen_residuals(std::span<const double> q) {
    const CurvatureEigenvalues ev = [&] {
        // closed forms only; residuals are what this function reports
        require_3d_point(q, "curvature_eigen_residuals");
        const double u = std::exp(q[1] - q[0]);
        const double v = std::exp(q[2] - q[1]);
        CurvatureEigenvalues e;
        e.lambda1 = (v - 2.0 * v * v) / ((1.0 + v) * (1.0 + v));
        e.lambda2 = u * v / ((1.0 + u) * (1.0 + v));
        e.lambda3 = (u - 2.0 * u * u) / ((1.0 + u) * (1.0 + u));
        return e;
    }();
    const SmallMatrix qf = q_form_3d(q);
    const SmallMatrix e = e_matrix(q);
    const std::array<double, 3> lambdas{ev.lambda1, ev.lambda2, ev.lambda3};
    std::array<double, 3> residuals{};
    for (int idx = 0; idx < 3; ++idx) {
        const double lam = lambdas[static_cast<std::size_t>(idx)];
        SmallMatrix m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m(i, j) = qf(i, j) - lam * e(i, j);
        const std::array<double, 3> x = null_vector(m);
        const std::vector<double> qx = qf.multiply(x);
        const std::vector<double> einv_qx = e.solve(qx);
        double res = 0.0;
        for (int i = 0; i < 3; ++i)
            res = std::max(res, std::abs(einv_qx[static_cast<std::size_t>(i)] -
                                         lam * x[static_cast<std::size_t>(i)]));
        residuals[static_cast<std::size_t>(idx)] = res;
    }
    return residuals;
}

CurvatureEigenvalues curvature_eigenvalues(std::span<const double> q) {
    require_3d_point(q, "curvature_eigenvalues");
    const double u = std::exp(q[1] - q[0]);
    const double v = std::exp(q[2] - q[1]);
    CurvatureEigenvalues e;
    e.lambda1 = (v - 2.0 * v * v) / ((1.0 + v) * (1.0 + v));
    e.lambda2 = u * v / ((1.0 + u) * (1.0 + v));
    e.lambda3 = (u - 2.0 * u * u) / ((1.0 + u) * (1.0 + u));
    const std::array<double, 3> res = curvature_eigen_residuals(q);
    for (double r : res)
        if (!(r < 1e-8))
            throw Error("curvature_eigenvalues: eigenvalue residual check failed");
    return e;
}

RayleighResult rayleigh_max(const SmallMatrix& a, const SmallMatrix& b) {
    if (a.size() != b.size())
        throw WrongArityError("rayleigh_max: dimension mismatch");
    if (!a.is_symmetric() || !b.is_symmetric())
        throw OutOfDomainError("rayleigh_max: matrices must be symmetric");
    const int n = a.size();
    const SmallMatrix l = cholesky(b); // throws unless B is SPD

    // C = L^{-1} A L^{-T} is symmetric and similar to B^{-1} A.
    SmallMatrix y(n);
    for (int col = 0; col < n; ++col) {
        // forward substitution L y = a(:, col)
        for (int i = 0; i < n; ++i) {
            double s = a(i, col);
            for (int k = 0; k < i; ++k)
                s -= l(i, k) * y(k, col);
            y(i, col) = s / l(i, i);
        }
    }
    SmallMatrix c(n);
    for (int row = 0; row < n; ++row) {
        // forward substitution on rows: c(row, :) solves L c^T = y^T
        for (int i = 0; i < n; ++i) {
            double s = y(row, i);
            for (int k = 0; k < i; ++k)
                s -= l(i, k) * c(row, k);
            c(row, i) = s / l(i, i);
        }
    }
    // enforce exact symmetry before Jacobi
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (c(i, j) + c(j, i));
            c.set_sym(i, j, v);
        }
    const SymmetricEigen eig = symmetric_eigen(c);
    const int top = n - 1;
    std::vector<double> yvec(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        yvec[static_cast<std::size_t>(i)] = eig.vectors(i, top);
    // x = L^{-T} y by back substitution
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        double s = yvec[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < n; ++k)
            s -= l(k, i) * x[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(i)] = s / l(i, i);
    }
    double nx = 0.0;
    for (double xi : x)
        nx += xi * xi;
    nx = std::sqrt(nx);
    for (double& xi : x)
        xi /= nx;
    return RayleighResult{eig.values[static_cast<std::size_t>(top)], std::move(x)};
}

} // namespace peakon
