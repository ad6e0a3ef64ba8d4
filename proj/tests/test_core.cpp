#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "peakon/core.hpp"
#include "peakon/matrix.hpp"
#include "peakon/random.hpp"

using namespace peakon;

namespace {

// Independent dense inverse for the metric oracle: plain double Gaussian
// elimination, written here so it shares nothing with the library path.
std::vector<double> dense_inverse(const SmallMatrix& m) {
    const int n = m.size();
    std::vector<double> w(static_cast<std::size_t>(n) * 2 * n, 0.0);
    auto at = [&](int r, int c) -> double& {
        return w[static_cast<std::size_t>(r) * 2 * n + c];
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            at(i, j) = m(i, j);
        at(i, n + i) = 1.0;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(at(r, col)) > std::abs(at(piv, col)))
                piv = r;
        for (int c = 0; c < 2 * n; ++c)
            std::swap(at(piv, c), at(col, c));
        const double d = at(col, col);
        for (int c = 0; c < 2 * n; ++c)
            at(col, c) /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const double f = at(r, col);
            for (int c = 0; c < 2 * n; ++c)
                at(r, c) -= f * at(col, c);
        }
    }
    std::vector<double> inv(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv[static_cast<std::size_t>(i) * n + j] = at(i, n + j);
    return inv;
}

} // namespace

TEST_CASE("peakon state validates its domain") {
    CHECK_NOTHROW(PeakonState({1.0, 0.0}, {1.0, 2.0}));
    CHECK_THROWS_AS(PeakonState({0.0, 1.0}, {1.0, 2.0}), OutOfDomainError);
    CHECK_THROWS_AS(PeakonState({1.0, 1.0}, {1.0, 2.0}), OutOfDomainError);
    CHECK_THROWS_AS(PeakonState({1.0, 0.0}, {1.0}), OutOfDomainError);
    CHECK_THROWS_AS(PeakonState({std::nan(""), 0.0}, {1.0, 2.0}), OutOfDomainError);
    CHECK_THROWS_AS(PeakonState({3.0, 2.0, 1.0, 0.0}, {1.0, 1.0, 1.0, 1.0}), WrongArityError);
    // configurable minimum gap
    CHECK_THROWS_AS(PeakonState({1.0, 1.0 - 1e-9}, {0.0, 0.0}, 1e-6), OutOfDomainError);
    CHECK_NOTHROW(PeakonState({1.0, 1.0 - 1e-3}, {0.0, 0.0}, 1e-6));
}

TEST_CASE("e_matrix entries") {
    SUBCASE("single peak") {
        const SmallMatrix e = e_matrix(std::vector<double>{0.0});
        CHECK(e.size() == 1);
        CHECK(e(0, 0) == 1.0);
    }
    SUBCASE("gap ln 2 gives 1/2 off-diagonal") {
        const SmallMatrix e = e_matrix(std::vector<double>{std::log(2.0), 0.0});
        CHECK(e(0, 0) == 1.0);
        CHECK(e(1, 1) == 1.0);
        CHECK(e(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(e(0, 1) == e(1, 0));
    }
    SUBCASE("three peaks") {
        const SmallMatrix e = e_matrix(std::vector<double>{1.0, 0.0, -1.0});
        CHECK(e(0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
        CHECK(e(1, 2) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
        CHECK(e(0, 2) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    }
    SUBCASE("rejects unordered and non-finite input") {
        CHECK_THROWS_AS(e_matrix(std::vector<double>{0.0, 1.0}), OutOfDomainError);
        CHECK_THROWS_AS(e_matrix(std::vector<double>{std::nan(""), 0.0}), OutOfDomainError);
    }
}

TEST_CASE("metric_matrix closed forms") {
    SUBCASE("n=1 is the identity") {
        const SmallMatrix g = metric_matrix(std::vector<double>{0.0});
        CHECK(g(0, 0) == 1.0);
    }
    SUBCASE("gap ln 2") {
        const SmallMatrix g = metric_matrix(std::vector<double>{std::log(2.0), 0.0});
        CHECK(g(0, 0) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
        CHECK(g(1, 1) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
        CHECK(g(0, 1) == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
    }
    SUBCASE("n=3 matches an independent dense inverse") {
        const std::vector<double> q{1.0, 0.0, -1.0};
        const SmallMatrix g = metric_matrix(q);
        const std::vector<double> inv = dense_inverse(e_matrix(q));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(g(i, j) ==
                      doctest::Approx(inv[static_cast<std::size_t>(i) * 3 + j]).epsilon(1e-12));
        CHECK(g(0, 2) == 0.0); // tridiagonal inverse
    }
}

TEST_CASE("metric inverse residual across the domain") {
    Rng rng(1234);
    // comfortably conditioned region: the literal 1e-10 identity bound
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.raw() % 3);
        const std::vector<double> q = random_positions(rng, n, 1e-5, 6.0);
        const SmallMatrix g = metric_matrix(q);
        CHECK(metric_residual(g, e_matrix(q)) < 1e-10);
    }
    // close to the collision set the attainable residual scales like
    // eps * |g|; check that scaled bound down to gaps of 1e-8
    for (int trial = 0; trial < 50; ++trial) {
        const double gap = std::pow(10.0, rng.uniform(-8.0, -5.0));
        const std::vector<double> q{gap, 0.0};
        const SmallMatrix g = metric_matrix(q);
        CHECK(metric_residual(g, e_matrix(q)) < 1e-12 * std::max(1.0, g.max_abs()));
    }
}

TEST_CASE("metric guard and generic fallback") {
    SUBCASE("a gap below double resolution is rejected as singular") {
        CHECK_THROWS_AS(metric_matrix(std::vector<double>{1e-17, 0.0}), SingularMatrixError);
    }
    SUBCASE("four points fall back to the generic inverse") {
        const std::vector<double> q{3.0, 1.5, 0.4, -1.0};
        const SmallMatrix g = metric_matrix(q);
        CHECK(metric_residual(g, e_matrix(q)) < 1e-13);
    }
}

TEST_CASE("hamiltonian values") {
    CHECK(hamiltonian(PeakonState({0.0}, {2.0})) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(hamiltonian(PeakonState({std::log(2.0), 0.0}, {1.0, 1.0})) ==
          doctest::Approx(1.5).epsilon(1e-14));
    CHECK(hamiltonian(PeakonState({1.0, 0.0}, {-1.0, 1.0})) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("hamiltonian is positive definite in p") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.raw() % 3);
        const PeakonState s = random_state(rng, n, 0.05, 5.0, 1e-3, 2.0);
        CHECK(hamiltonian(s) > 0.0);
    }
}

TEST_CASE("equations of motion") {
    SUBCASE("single peak moves freely") {
        const PhaseDerivative d = eom_rhs(PeakonState({0.0}, {0.7}));
        CHECK(d.qdot[0] == 0.7);
        CHECK(d.pdot[0] == 0.0);
    }
    SUBCASE("frozen two-peak example") {
        const PhaseDerivative d = eom_rhs(PeakonState({1.0, 0.0}, {-1.0, 1.0}));
        const double w = std::exp(-1.0);
        CHECK(d.qdot[0] == doctest::Approx(-1.0 + w).epsilon(1e-15));
        CHECK(d.qdot[1] == doctest::Approx(1.0 - w).epsilon(1e-15));
        CHECK(d.pdot[0] == doctest::Approx(-w).epsilon(1e-15));
        CHECK(d.pdot[1] == doctest::Approx(w).epsilon(1e-15));
        // the gap rate matches (1 - e^{-z})(p1 - p2)
        const double zdot = d.qdot[0] - d.qdot[1];
        CHECK(zdot == doctest::Approx((1.0 - w) * (-2.0)).epsilon(1e-14));
    }
    SUBCASE("zero momentum stays critical") {
        const PhaseDerivative d = eom_rhs(PeakonState({1.0, 0.0, -1.0}, {0.0, 1.0, -0.5}));
        CHECK(d.pdot[0] == 0.0);
    }
}

TEST_CASE("eom matches central differences of the hamiltonian") {
    Rng rng(7);
    const double step = 1e-6;
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
            CHECK(std::abs((hp - hm) / (2.0 * step) - d.qdot[static_cast<std::size_t>(i)]) <
                  1e-6);

            std::vector<double> q = s.q();
            q[static_cast<std::size_t>(i)] += step;
            const double hqp = hamiltonian(PeakonState(q, s.p()));
            q[static_cast<std::size_t>(i)] -= 2.0 * step;
            const double hqm = hamiltonian(PeakonState(q, s.p()));
            CHECK(std::abs((hqp - hqm) / (2.0 * step) + d.pdot[static_cast<std::size_t>(i)]) <
                  1e-6);
        }
    }
}

TEST_CASE("peakon field") {
    const PeakonState single({0.0}, {3.0});
    CHECK(peakon_field(single, 0.0) == 3.0);
    CHECK(peakon_field(single, 1.0) == doctest::Approx(3.0 * std::exp(-1.0)).epsilon(1e-15));
    const PeakonState pair({1.0, 0.0}, {1.0, 1.0});
    CHECK(peakon_field(pair, 0.5) == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-15));
}

TEST_CASE("velocity/momentum duality") {
    SUBCASE("single peak is the identity pairing") {
        const Covector p = momentum_from_velocity(std::vector<double>{0.0}, TangentVector{{5.0}});
        CHECK(p.components[0] == 5.0);
    }
    SUBCASE("worked 2-peak example") {
        const Covector p = momentum_from_velocity(std::vector<double>{std::log(2.0), 0.0},
                                                  TangentVector{{1.0, 1.0}});
        CHECK(p.components[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
        CHECK(p.components[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    }
    SUBCASE("round trip is the identity") {
        Rng rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + static_cast<int>(rng.raw() % 3);
            const PeakonState s = random_state(rng, n, 0.1, 4.0, 0.1, 2.0);
            const TangentVector v = velocity_from_momentum(s.q(), Covector{s.p()});
            const Covector back = momentum_from_velocity(s.q(), v);
            for (int i = 0; i < n; ++i)
                CHECK(std::abs(back.components[static_cast<std::size_t>(i)] -
                               s.p()[static_cast<std::size_t>(i)]) < 1e-12);
        }
    }
}
