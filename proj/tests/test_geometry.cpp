#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "peakon/geometry.hpp"
#include "peakon/random.hpp"

using namespace peakon;

TEST_CASE("gauss curvature closed form") {
    SUBCASE("vanishes at gap ln 2") {
        CHECK(std::abs(gauss_curvature_2d(std::vector<double>{std::log(2.0), 0.0})) < 1e-12);
    }
    SUBCASE("collision-line limit is -1/4") {
        CHECK(gauss_curvature_2d(std::vector<double>{1e-8, 0.0}) ==
              doctest::Approx(-0.25).epsilon(1e-6));
    }
    SUBCASE("gap ln 4 gives 2/25") {
        CHECK(gauss_curvature_2d(std::vector<double>{std::log(4.0), 0.0}) ==
              doctest::Approx(0.08).epsilon(1e-14));
    }
    SUBCASE("sign trichotomy around ln 2") {
        for (double z : {0.1, 0.3, 0.6})
            CHECK(gauss_curvature_2d(std::vector<double>{z, 0.0}) < 0.0);
        for (double z : {0.75, 1.0, 3.0})
            CHECK(gauss_curvature_2d(std::vector<double>{z, 0.0}) > 0.0);
    }
    SUBCASE("decays at infinity") {
        CHECK(std::abs(gauss_curvature_2d(std::vector<double>{20.0, 0.0})) < 1e-6);
        // no overflow even for huge separations
        CHECK(std::isfinite(gauss_curvature_2d(std::vector<double>{800.0, 0.0})));
    }
    SUBCASE("wrong arity") {
        CHECK_THROWS_AS(gauss_curvature_2d(std::vector<double>{1.0, 0.0, -1.0}), WrongArityError);
    }
}

TEST_CASE("christoffel symbols by finite differences") {
    SUBCASE("flat single-peak line") {
        const ChristoffelSymbols c = christoffel_fd(std::vector<double>{0.3});
        CHECK(c.at(0, 0, 0) == 0.0);
    }
    SUBCASE("symmetric in the lower indices") {
        Rng rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            const std::vector<double> q = random_positions(rng, 3, 0.3, 3.0);
            const ChristoffelSymbols c = christoffel_fd(q);
            for (int k = 0; k < 3; ++k)
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        CHECK(std::abs(c.at(k, i, j) - c.at(k, j, i)) < 1e-10);
        }
    }
    SUBCASE("matches the diagonal-coordinate symbols after a linear change") {
        // s1 = (q1+q2)/2, s2 = (q1-q2)/2 diagonalizes the two-peak metric; in
        // those coordinates the symbols have short closed forms in
        // Y = e^{-2 s2}.
        Rng rng(4);
        for (int trial = 0; trial < 20; ++trial) {
            const double z = rng.uniform(0.3, 4.0);
            const double off = rng.uniform(-2.0, 2.0);
            const std::vector<double> q{off + z, off};
            const ChristoffelSymbols cq = christoffel_fd(q);
            // transform: ds/dq and dq/ds for the linear change above
            const double ds_dq[2][2] = {{0.5, 0.5}, {0.5, -0.5}};
            const double dq_ds[2][2] = {{1.0, 1.0}, {1.0, -1.0}};
            double cs[2][2][2] = {};
            for (int k = 0; k < 2; ++k)
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        double sum = 0.0;
                        for (int c = 0; c < 2; ++c)
                            for (int a = 0; a < 2; ++a)
                                for (int b = 0; b < 2; ++b)
                                    sum += ds_dq[k][c] * dq_ds[a][i] * dq_ds[b][j] *
                                           cq.at(c, a, b);
                        cs[k][i][j] = sum;
                    }
            const double y = std::exp(-z); // e^{-2 s2}
            CHECK(std::abs(cs[0][0][0]) < 1e-6);
            CHECK(std::abs(cs[0][1][1]) < 1e-6);
            CHECK(std::abs(cs[1][0][1]) < 1e-6);
            CHECK(cs[0][0][1] == doctest::Approx(y / (1.0 + y)).epsilon(1e-6));
            CHECK(cs[1][0][0] ==
                  doctest::Approx(-y * (1.0 - y) / ((1.0 + y) * (1.0 + y))).epsilon(1e-6));
            CHECK(cs[1][1][1] == doctest::Approx(-y / (1.0 - y)).epsilon(1e-6));
        }
    }
    SUBCASE("step guard") {
        CHECK_THROWS_AS(christoffel_fd(std::vector<double>{1e-5, 0.0}, 1e-5), StepTooLargeError);
    }
}

TEST_CASE("finite-difference curvature tensor symmetries") {
    const std::vector<double> q{1.1, 0.1, -0.9};
    const RiemannRaw raw = riemann_fd_raw(q);
    SUBCASE("repeated antisymmetric pair vanishes") {
        CHECK(std::abs(raw.at(0, 0, 1, 2)) < 1e-8);
        CHECK(std::abs(raw.at(1, 2, 0, 0)) < 1e-8);
    }
    SUBCASE("pair exchange symmetry") {
        CHECK(std::abs(raw.at(0, 1, 0, 2) - raw.at(0, 2, 0, 1)) < 1e-8);
        CHECK(std::abs(raw.at(0, 1, 1, 2) - raw.at(1, 2, 0, 1)) < 1e-8);
    }
    SUBCASE("antisymmetry in each pair") {
        CHECK(std::abs(raw.at(0, 1, 0, 1) + raw.at(1, 0, 0, 1)) < 1e-8);
        CHECK(std::abs(raw.at(0, 1, 0, 1) + raw.at(0, 1, 1, 0)) < 1e-8);
    }
}

TEST_CASE("closed-form curvature tensor") {
    SUBCASE("direct R_1313 value at unit gaps") {
        const std::vector<double> q{1.0, 0.0, -1.0};
        const double e1 = std::exp(1.0);
        const double delta1 = (std::exp(0.0) - e1) * (std::exp(-1.0) - 1.0) *
                              (1.0 + e1) * (1.0 + e1) *
                              (std::exp(-1.0) + 1.0) * (std::exp(-1.0) + 1.0);
        const double expected = e1 / delta1;
        CHECK(expected > 0.0);
        CHECK(riemann_3d(q).r1313 == doctest::Approx(expected).epsilon(1e-12));
    }
    SUBCASE("all components decay at wide separation") {
        const RiemannComponents3D r = riemann_3d(std::vector<double>{20.0, 0.0, -20.0});
        for (double v : {r.r1212, r.r2323, r.r1313, r.r1213, r.r1223, r.r1323})
            CHECK(std::abs(v) < 1e-6);
    }
    SUBCASE("R_1213 is negative on the ordered domain") {
        Rng rng(8);
        for (int trial = 0; trial < 50; ++trial) {
            const std::vector<double> q = random_positions(rng, 3, 0.05, 6.0);
            CHECK(riemann_3d(q).r1213 < 0.0);
        }
    }
    SUBCASE("overflow guard") {
        CHECK_THROWS_AS(riemann_3d(std::vector<double>{301.0, 0.0, -1.0}), OverflowError);
    }
    SUBCASE("symmetry expansion lookup") {
        const RiemannComponents3D r = riemann_3d(std::vector<double>{1.0, 0.0, -1.0});
        CHECK(r.component(1, 2, 1, 2) == r.r1212);
        CHECK(r.component(2, 1, 1, 2) == -r.r1212);
        CHECK(r.component(1, 2, 2, 1) == -r.r1212);
        CHECK(r.component(2, 3, 1, 2) == r.r1223);
        CHECK(r.component(1, 1, 2, 3) == 0.0);
        CHECK(r.component(3, 1, 3, 2) == r.r1323);
    }
}

TEST_CASE("gap-variable evaluation equals the raw exponential form") {
    // The library evaluates the tensor through u = e^{q2-q1}, v = e^{q3-q2}
    // to avoid overflow. At moderate points the components can also be
    // assembled from the unnormalized exponentials over
    // Delta1 = (e^{q2}-e^{q1})(e^{q3}-e^{q2})(e^{q2}+e^{q1})^2(e^{q3}+e^{q2})^2
    // directly; the two routes must agree to roundoff.
    Rng rng(14);
    for (int trial = 0; trial < 25; ++trial) {
        const std::vector<double> q = random_positions(rng, 3, 0.2, 2.5);
        const double e1 = std::exp(q[0]);
        const double e2 = std::exp(q[1]);
        const double e3 = std::exp(q[2]);
        const double delta1 = (e2 - e1) * (e3 - e2) * (e2 + e1) * (e2 + e1) *
                              (e3 + e2) * (e3 + e2);
        const auto ex = [](double a) { return std::exp(a); };
        const double r1212 =
            ((3.0 * ex(3.0 * q[2] + 2.0 * q[1]) + 2.0 * ex(2.0 * q[2] + 3.0 * q[1]) -
              2.0 * ex(q[2] + 4.0 * q[1]) - 2.0 * ex(5.0 * q[1])) *
                 ex(2.0 * q[0]) +
             (-ex(2.0 * q[2] + 2.0 * q[1]) + ex(q[2] + 3.0 * q[1]) + ex(4.0 * q[1])) *
                 ex(3.0 * q[0])) /
            ((e1 + e2) * delta1);
        const double r2323 =
            ((3.0 * ex(5.0 * q[1]) + 2.0 * ex(4.0 * q[1] + q[0]) -
              2.0 * ex(3.0 * q[1] + 2.0 * q[0]) - 2.0 * ex(2.0 * q[1] + 3.0 * q[0])) *
                 ex(2.0 * q[2]) +
             (-ex(5.0 * q[1] + q[0]) + ex(4.0 * q[1] + 2.0 * q[0]) +
              ex(3.0 * q[1] + 3.0 * q[0])) *
                 ex(q[2])) /
            ((e2 + e3) * delta1);
        const double r1313 = ex(q[2] + 3.0 * q[1] + 2.0 * q[0]) / delta1;
        const double r1213 = -ex(2.0 * q[2] + 2.0 * q[1] + 2.0 * q[0]) / delta1;
        const double r1223 = ex(2.0 * q[2] + 3.0 * q[1] + q[0]) / delta1;
        const double r1323 = -ex(q[2] + 4.0 * q[1] + q[0]) / delta1;
        const RiemannComponents3D r = riemann_3d(q);
        CHECK(r.r1212 == doctest::Approx(r1212).epsilon(1e-11));
        CHECK(r.r2323 == doctest::Approx(r2323).epsilon(1e-11));
        CHECK(r.r1313 == doctest::Approx(r1313).epsilon(1e-11));
        CHECK(r.r1213 == doctest::Approx(r1213).epsilon(1e-11));
        CHECK(r.r1223 == doctest::Approx(r1223).epsilon(1e-11));
        CHECK(r.r1323 == doctest::Approx(r1323).epsilon(1e-11));
    }
}

TEST_CASE("closed form matches the finite-difference oracle") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<double> q = random_positions(rng, 3, 0.5, 5.0);
        const RiemannComponents3D c = riemann_3d(q);
        const RiemannComponents3D f = riemann_fd(q);
        const double cv[6] = {c.r1212, c.r2323, c.r1313, c.r1213, c.r1223, c.r1323};
        const double fv[6] = {f.r1212, f.r2323, f.r1313, f.r1213, f.r1223, f.r1323};
        for (int i = 0; i < 6; ++i) {
            if (std::abs(cv[i]) <= 1e-10)
                continue;
            CHECK(std::abs(fv[i] - cv[i]) / std::abs(cv[i]) < 1e-5);
        }
    }
}

TEST_CASE("gauss curvature matches the finite-difference oracle") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<double> q = random_positions(rng, 2, 0.5, 5.0);
        const double closed = gauss_curvature_2d(q);
        if (std::abs(closed) <= 1e-10)
            continue;
        CHECK(std::abs(gauss_curvature_fd_2d(q) - closed) / std::abs(closed) < 1e-5);
    }
}

TEST_CASE("sectional curvature") {
    SUBCASE("restricts to the two-peak curvature on the integrable planes") {
        Rng rng(21);
        for (int trial = 0; trial < 20; ++trial) {
            const std::vector<double> q = random_positions(rng, 3, 0.2, 4.0);
            // plane with vanishing first dual momentum
            const TangentVector a1{{std::exp(-q[0]), std::exp(-q[1]), 0.0}};
            const TangentVector b1{{0.0, 0.0, 1.0}};
            const std::vector<double> q23{q[1], q[2]};
            CHECK(sectional_curvature_3d(q, a1, b1) ==
                  doctest::Approx(gauss_curvature_2d(q23)).epsilon(1e-10));
            // plane with vanishing last dual momentum
            const TangentVector a3{{0.0, std::exp(q[1]), std::exp(q[2])}};
            const TangentVector b3{{1.0, 0.0, 0.0}};
            const std::vector<double> q12{q[0], q[1]};
            CHECK(sectional_curvature_3d(q, a3, b3) ==
                  doctest::Approx(gauss_curvature_2d(q12)).epsilon(1e-10));
        }
    }
    SUBCASE("invariant under a change of spanning basis") {
        const std::vector<double> q{1.0, 0.0, -1.5};
        const TangentVector a{{0.4, -0.3, 1.0}};
        const TangentVector b{{1.0, 0.7, -0.2}};
        const TangentVector apb{{1.4, 0.4, 0.8}};
        CHECK(sectional_curvature_3d(q, a, b) ==
              doctest::Approx(sectional_curvature_3d(q, apb, b)).epsilon(1e-10));
    }
    SUBCASE("bounded above by 1/4 over random planes") {
        Rng rng(22);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::vector<double> q = random_positions(rng, 3, 0.05, 6.0);
            const TangentVector a{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                   rng.uniform(-1.0, 1.0)}};
            const TangentVector b{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                   rng.uniform(-1.0, 1.0)}};
            double kappa;
            try {
                kappa = sectional_curvature_3d(q, a, b);
            } catch (const DegeneratePlaneError&) {
                continue;
            }
            CHECK(kappa < 0.25);
        }
    }
    SUBCASE("agrees with the full tensor contraction") {
        Rng rng(24);
        for (int trial = 0; trial < 50; ++trial) {
            const std::vector<double> q = random_positions(rng, 3, 0.2, 4.0);
            const TangentVector a{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                   rng.uniform(-1.0, 1.0)}};
            const TangentVector b{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                   rng.uniform(-1.0, 1.0)}};
            const RiemannComponents3D r = riemann_3d(q);
            double num = 0.0;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    for (int k = 1; k <= 3; ++k)
                        for (int l = 1; l <= 3; ++l)
                            num += r.component(i, j, k, l) *
                                   a.components[static_cast<std::size_t>(i - 1)] *
                                   b.components[static_cast<std::size_t>(j - 1)] *
                                   a.components[static_cast<std::size_t>(k - 1)] *
                                   b.components[static_cast<std::size_t>(l - 1)];
            const SmallMatrix g = metric_matrix(q);
            const std::vector<double> ga = g.multiply(a.components);
            const std::vector<double> gb = g.multiply(b.components);
            double gaa = 0.0, gbb = 0.0, gab = 0.0;
            for (int i = 0; i < 3; ++i) {
                gaa += ga[static_cast<std::size_t>(i)] * a.components[static_cast<std::size_t>(i)];
                gbb += gb[static_cast<std::size_t>(i)] * b.components[static_cast<std::size_t>(i)];
                gab += ga[static_cast<std::size_t>(i)] * b.components[static_cast<std::size_t>(i)];
            }
            const double gram = gaa * gbb - gab * gab;
            if (gram < 1e-10)
                continue;
            CHECK(sectional_curvature_3d(q, a, b) ==
                  doctest::Approx(num / gram).epsilon(1e-10));
        }
    }
    SUBCASE("degenerate plane is rejected") {
        const std::vector<double> q{1.0, 0.0, -1.0};
        const TangentVector a{{1.0, 2.0, 3.0}};
        const TangentVector b{{2.0, 4.0, 6.0}};
        CHECK_THROWS_AS(sectional_curvature_3d(q, a, b), DegeneratePlaneError);
    }
}

TEST_CASE("curvature-bound eigenvalues") {
    SUBCASE("unit-gap values") {
        const CurvatureEigenvalues ev = curvature_eigenvalues(std::vector<double>{1.0, 0.0, -1.0});
        const double u = std::exp(-1.0);
        const double expected13 = (u - 2.0 * u * u) / ((1.0 + u) * (1.0 + u));
        const double expected2 = u * u / ((1.0 + u) * (1.0 + u));
        CHECK(ev.lambda1 == doctest::Approx(expected13).epsilon(1e-14));
        CHECK(ev.lambda3 == doctest::Approx(expected13).epsilon(1e-14));
        CHECK(ev.lambda2 == doctest::Approx(expected2).epsilon(1e-14));
        CHECK(ev.lambda1 == doctest::Approx(0.051952).epsilon(1e-4));
        CHECK(ev.lambda2 == doctest::Approx(0.072330).epsilon(1e-4));
    }
    SUBCASE("eigenvector residuals are tiny") {
        Rng rng(33);
        for (int trial = 0; trial < 50; ++trial) {
            const std::vector<double> q = random_positions(rng, 3, 0.1, 5.0);
            const std::array<double, 3> res = curvature_eigen_residuals(q);
            for (double r : res)
                CHECK(r < 1e-8);
        }
    }
    SUBCASE("lambda1 peaks at 1/12 where e^{q3-q2} = 1/5") {
        const std::vector<double> q{10.0, std::log(5.0), 0.0};
        const CurvatureEigenvalues ev = curvature_eigenvalues(q);
        CHECK(ev.lambda1 == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
        Rng rng(34);
        for (int trial = 0; trial < 200; ++trial) {
            const std::vector<double> qq = random_positions(rng, 3, 0.02, 8.0);
            const CurvatureEigenvalues e2 = curvature_eigenvalues(qq);
            CHECK(e2.lambda1 <= 1.0 / 12.0 + 1e-12);
            CHECK(e2.lambda3 <= 1.0 / 12.0 + 1e-12);
            CHECK(e2.lambda2 < 0.25);
        }
    }
    SUBCASE("equal-gap lambda2 has the announced shape") {
        for (double d : {0.5, 1.0, 2.0}) {
            const std::vector<double> q{d, 0.0, -d};
            const CurvatureEigenvalues ev = curvature_eigenvalues(q);
            const double expected = 1.0 / (std::exp(2.0 * d) + 2.0 * std::exp(d) + 1.0);
            CHECK(ev.lambda2 == doctest::Approx(expected).epsilon(1e-13));
        }
    }
    SUBCASE("closed forms match a generalized eigensolve of (Q, E)") {
        Rng rng(35);
        for (int trial = 0; trial < 30; ++trial) {
            const std::vector<double> q = random_positions(rng, 3, 0.2, 4.0);
            const CurvatureEigenvalues ev = curvature_eigenvalues(q);
            std::array<double, 3> sorted{ev.lambda1, ev.lambda2, ev.lambda3};
            std::sort(sorted.begin(), sorted.end());
            // Jacobi route: eigenvalues of L^{-1} Q L^{-T} with E = L L^T
            const SmallMatrix e = e_matrix(q);
            const SmallMatrix l = cholesky(e);
            SmallMatrix y(3), c(3);
            const SmallMatrix qf = q_form_3d(q);
            for (int col = 0; col < 3; ++col)
                for (int i = 0; i < 3; ++i) {
                    double s = qf(i, col);
                    for (int k = 0; k < i; ++k)
                        s -= l(i, k) * y(k, col);
                    y(i, col) = s / l(i, i);
                }
            for (int row = 0; row < 3; ++row)
                for (int i = 0; i < 3; ++i) {
                    double s = y(row, i);
                    for (int k = 0; k < i; ++k)
                        s -= l(i, k) * c(row, k);
                    c(row, i) = s / l(i, i);
                }
            const SymmetricEigen eig = symmetric_eigen(c);
            for (int i = 0; i < 3; ++i)
                CHECK(sorted[static_cast<std::size_t>(i)] ==
                      doctest::Approx(eig.values[static_cast<std::size_t>(i)]).epsilon(1e-10));
        }
    }
}

TEST_CASE("rayleigh bound") {
    SUBCASE("identical forms give 1") {
        SmallMatrix a(2);
        a(0, 0) = 2.0;
        a(1, 1) = 3.0;
        a.set_sym(0, 1, 0.5);
        const RayleighResult r = rayleigh_max(a, a);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("diagonal against the identity") {
        SmallMatrix a(2);
        a(0, 0) = 2.0;
        a(1, 1) = 1.0;
        const RayleighResult r = rayleigh_max(a, SmallMatrix::identity(2));
        CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(std::abs(std::abs(r.vector[0]) - 1.0) < 1e-10);
    }
    SUBCASE("bounds the quotient over many random directions") {
        Rng rng(44);
        SmallMatrix a(3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                a.set_sym(i, j, rng.uniform(-2.0, 2.0));
        SmallMatrix m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m(i, j) = rng.uniform(-1.0, 1.0);
        SmallMatrix b(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = (i == j) ? 0.5 : 0.0;
                for (int k = 0; k < 3; ++k)
                    s += m(i, k) * m(j, k);
                b(i, j) = s;
            }
        const RayleighResult r = rayleigh_max(a, b);
        // the maximizer attains the bound
        const std::vector<double> av = a.multiply(r.vector);
        const std::vector<double> bv = b.multiply(r.vector);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < 3; ++i) {
            num += av[static_cast<std::size_t>(i)] * r.vector[static_cast<std::size_t>(i)];
            den += bv[static_cast<std::size_t>(i)] * r.vector[static_cast<std::size_t>(i)];
        }
        CHECK(num / den == doctest::Approx(r.value).epsilon(1e-10));
        for (int draw = 0; draw < 100000; ++draw) {
            const std::array<double, 3> z{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                          rng.uniform(-1.0, 1.0)};
            const std::vector<double> az = a.multiply(z);
            const std::vector<double> bz = b.multiply(z);
            double n2 = 0.0, d2 = 0.0;
            for (int i = 0; i < 3; ++i) {
                n2 += az[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
                d2 += bz[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
            }
            if (d2 <= 1e-12)
                continue;
            CHECK(n2 / d2 <= r.value + 1e-9);
        }
    }
    SUBCASE("rejects an indefinite base form") {
        SmallMatrix a = SmallMatrix::identity(2);
        SmallMatrix b(2);
        b(0, 0) = 1.0;
        b(1, 1) = -1.0;
        CHECK_THROWS_AS(rayleigh_max(a, b), NotPositiveDefiniteError);
    }
}
