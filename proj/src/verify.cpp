#include "peakon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "peakon/collision.hpp"
#include "peakon/core.hpp"
#include "peakon/geometry.hpp"
#include "peakon/invariants.hpp"
#include "peakon/random.hpp"

namespace peakon {

namespace {

std::string worst_fmt(const char* label, double worst, double tol) {
    std::ostringstream ss;
    ss << label << " max err " << worst << " (tol " << tol << ")";
    return ss.str();
}

VerifySuiteResult suite_metric(Rng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.raw() % 3);
        const std::vector<double> q = random_positions(rng, n, 1e-3, 4.0);
        const SmallMatrix g = metric_matrix(q);
        const SmallMatrix e = e_matrix(q);
        worst = std::max(worst, metric_residual(g, e) / std::max(1.0, g.max_abs()));
        // closed form against the generic elimination inverse
        const SmallMatrix ginv = e.inverse();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                worst = std::max(worst, std::abs(g(i, j) - ginv(i, j)) /
                                            std::max(1.0, g.max_abs()));
    }
    const double tol = 1e-12;
    return {"metric", worst < tol, worst_fmt("inverse residual", worst, tol)};
}

VerifySuiteResult suite_gradients(Rng& rng) {
    const double step = 1e-6;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.raw() % 3);
        const PeakonState s = random_state(rng, n, 0.1, 3.0, 0.0, 2.0);
        const PhaseDerivative d = eom_rhs(s);
        for (int i = 0; i < n; ++i) {
            std::vector<double> p = s.p();
            p[static_cast<std::size_t>(i)] += step;
            const double hp = hamiltonian(PeakonState(s.q(), p));
            p[static_cast<std::size_t>(i)] -= 2.0 * step;
            const double hm = hamiltonian(PeakonState(s.q(), p));
            worst = std::max(worst, std::abs((hp - hm) / (2.0 * step) -
                                             d.qdot[static_cast<std::size_t>(i)]));

            std::vector<double> q = s.q();
            q[static_cast<std::size_t>(i)] += step;
            const double hq = hamiltonian(PeakonState(q, s.p()));
            q[static_cast<std::size_t>(i)] -= 2.0 * step;
            const double hqm = hamiltonian(PeakonState(q, s.p()));
            worst = std::max(worst, std::abs((hq - hqm) / (2.0 * step) +
                                             d.pdot[static_cast<std::size_t>(i)]));
        }
    }
    const double tol = 1e-6;
    return {"gradients", worst < tol, worst_fmt("eom vs finite differences", worst, tol)};
}

VerifySuiteResult suite_riemann(Rng& rng, bool inject_flip) {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<double> q = random_positions(rng, 3, 0.5, 5.0);
        RiemannComponents3D closed = riemann_3d(q);
        if (inject_flip)
            closed.r1213 = -closed.r1213;
        const RiemannComponents3D fd = riemann_fd(q);
        const double closed_vals[6] = {closed.r1212, closed.r2323, closed.r1313,
                                       closed.r1213, closed.r1223, closed.r1323};
        const double fd_vals[6] = {fd.r1212, fd.r2323, fd.r1313,
                                   fd.r1213, fd.r1223, fd.r1323};
        for (int c = 0; c < 6; ++c) {
            if (std::abs(closed_vals[c]) <= 1e-10)
                continue;
            worst = std::max(worst,
                             std::abs(fd_vals[c] - closed_vals[c]) / std::abs(closed_vals[c]));
        }
    }
    const double tol = 1e-5;
    return {"riemann", worst < tol,
            worst_fmt("closed form vs finite differences (relative)", worst, tol)};
}

VerifySuiteResult suite_hhat(Rng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        for (int n = 2; n <= 3; ++n) {
            const PeakonState s = random_state(rng, n, 0.1, 3.0, 0.1, 2.0);
            worst = std::max(worst, std::abs(hhat(s) - hhat_from_integrals(s)));
        }
    }
    const double tol = 1e-12;
    return {"hhat", worst < tol, worst_fmt("factored vs defining combination", worst, tol)};
}

VerifySuiteResult suite_rayleigh(Rng& rng) {
    double worst_excess = -1.0;
    for (int matrices = 0; matrices < 5; ++matrices) {
        SmallMatrix a(3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                a.set_sym(i, j, rng.uniform(-2.0, 2.0));
        // SPD: B = M M^T + I
        SmallMatrix m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m(i, j) = rng.uniform(-1.0, 1.0);
        SmallMatrix b(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = (i == j) ? 1.0 : 0.0;
                for (int k = 0; k < 3; ++k)
                    s += m(i, k) * m(j, k);
                b(i, j) = s;
            }
        const RayleighResult r = rayleigh_max(a, b);
        for (int draw = 0; draw < 20000; ++draw) {
            std::array<double, 3> z{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                    rng.uniform(-1.0, 1.0)};
            const std::vector<double> az = a.multiply(z);
            const std::vector<double> bz = b.multiply(z);
            double num = 0.0, den = 0.0;
            for (int i = 0; i < 3; ++i) {
                num += az[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
                den += bz[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
            }
            if (den <= 0.0)
                continue;
            worst_excess = std::max(worst_excess, num / den - r.value);
        }
    }
    const double tol = 1e-9;
    return {"rayleigh", worst_excess < tol,
            worst_fmt("max quotient excess over lambda_max", worst_excess, tol)};
}

VerifySuiteResult suite_alpha(Rng& rng) {
    double worst = 0.0;
    double smallest_defect = 1e300;
    double worst_d1 = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::vector<double> q = random_positions(rng, 3, 0.1, 3.0);
        const Covector a = alpha_form_3d(q);
        // both spanning fields of the annihilated distribution
        const std::array<double, 3> fields[2] = {
            {std::exp(-q[0]), std::exp(-q[1]), std::exp(-q[2])},
            {std::exp(q[0]), std::exp(q[1]), std::exp(q[2])}};
        for (const auto& f : fields) {
            double pairing = 0.0;
            double scale = 0.0;
            for (int i = 0; i < 3; ++i) {
                pairing += a.components[static_cast<std::size_t>(i)] *
                           f[static_cast<std::size_t>(i)];
                scale += std::abs(a.components[static_cast<std::size_t>(i)] *
                                  f[static_cast<std::size_t>(i)]);
            }
            worst = std::max(worst, std::abs(pairing) / std::max(1.0, scale));
        }
        smallest_defect = std::min(smallest_defect, std::abs(integrability_defect_3d(q)));
        worst_d1 = std::max(worst_d1, std::abs(integrability_defect_d1_3d(q)));
        // analytic exterior derivative against central differences of alpha
        const std::array<double, 3> da = alpha_exterior_derivative_3d(q);
        const double step = 1e-6;
        std::vector<double> qs(q.begin(), q.end());
        double dfd[3][3];
        for (int i = 0; i < 3; ++i) {
            qs[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)] + step;
            const Covector ap = alpha_form_3d(qs);
            qs[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)] - step;
            const Covector am = alpha_form_3d(qs);
            qs[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)];
            for (int j = 0; j < 3; ++j)
                dfd[i][j] = (ap.components[static_cast<std::size_t>(j)] -
                             am.components[static_cast<std::size_t>(j)]) /
                            (2.0 * step);
        }
        const double da_fd[3] = {dfd[0][1] - dfd[1][0], dfd[0][2] - dfd[2][0],
                                 dfd[1][2] - dfd[2][1]};
        for (int c = 0; c < 3; ++c)
            worst = std::max(worst, std::abs(da[static_cast<std::size_t>(c)] - da_fd[c]));
    }
    std::ostringstream ss;
    ss << "annihilation/agreement err " << worst << ", min |defect| " << smallest_defect
       << ", max D1 defect " << worst_d1;
    const bool pass = worst < 1e-6 && smallest_defect > 1e-10 && worst_d1 < 1e-10;
    return {"alpha", pass, ss.str()};
}

} // namespace

std::vector<VerifySuiteResult> run_verification(const VerifyOptions& options) {
    const auto wanted = [&](const std::string& name) {
        return options.only.empty() ||
               std::find(options.only.begin(), options.only.end(), name) != options.only.end();
    };
    std::vector<VerifySuiteResult> results;
    Rng rng(options.seed);
    if (wanted("metric"))
        results.push_back(suite_metric(rng));
    if (wanted("gradients"))
        results.push_back(suite_gradients(rng));
    if (wanted("riemann"))
        results.push_back(suite_riemann(rng, options.inject_r1213_sign_flip));
    if (wanted("hhat"))
        results.push_back(suite_hhat(rng));
    if (wanted("rayleigh"))
        results.push_back(suite_rayleigh(rng));
    if (wanted("alpha"))
        results.push_back(suite_alpha(rng));
    return results;
}

} // namespace peakon
