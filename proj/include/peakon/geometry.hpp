#ifndef PEAKON_GEOMETRY_HPP
#define PEAKON_GEOMETRY_HPP

#include <array>
#include <span>

#include "peakon/matrix.hpp"
#include "peakon/state.hpp"

namespace peakon {

/// Gauss curvature of the twopeakon metric, in the overflow-free form
///   kappa = (u - 2u^2) / (1 + u)^2,  u = e^{-(q1-q2)}.
/// Vanishes at q1 - q2 = ln 2, tends to -1/4 at the collision line and to 0
/// at infinite separation.
double gauss_curvature_2d(std::span<const double> q);

/// Christoffel symbols Gamma^k_ij of the peakon metric, with metric
/// derivatives taken by central differences in the q coordinates.
struct ChristoffelSymbols {
    int n = 0;
    std::array<std::array<std::array<double, 3>, 3>, 3> gamma{}; // [k][i][j]

    double at(int k, int i, int j) const noexcept {
        return gamma[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]
                    [static_cast<std::size_t>(j)];
    }
};
ChristoffelSymbols christoffel_fd(std::span<const double> q, double step = 1e-5);

/// Covariant Riemann components at a point of the threepeakon metric; the six
/// stored values determine the rest through R_ijkl = R_klij = -R_jikl.
struct RiemannComponents3D {
    double r1212 = 0.0;
    double r2323 = 0.0;
    double r1313 = 0.0;
    double r1213 = 0.0;
    double r1223 = 0.0;
    double r1323 = 0.0;

    // 1-based indices; expands the stored values through the symmetries.
    double component(int i, int j, int k, int l) const;
};

/// Closed-form Riemann components, evaluated through the gap variables
/// u = e^{q2-q1}, v = e^{q3-q2} in (0,1) so that no intermediate overflows.
RiemannComponents3D riemann_3d(std::span<const double> q);

/// Finite-difference Riemann tensor: curvature assembled from
/// centrally-differenced Christoffel symbols of a linear-solve metric.
/// Independent of every closed form above; used to validate riemann_3d.
/// step <= 0 selects min(5e-3, min_gap/10); Richardson-extrapolated
/// extended-precision differences keep the small far-field components
/// meaningful.
RiemannComponents3D riemann_fd(std::span<const double> q, double step = 0.0);

/// Raw (unsymmetrized) finite-difference tensor for symmetry audits.
struct RiemannRaw {
    int n = 0;
    std::array<double, 81> r{}; // [i][j][k][l], 0-based, stride 27/9/3/1

    double at(int i, int j, int k, int l) const noexcept {
        return r[static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l)];
    }
};
RiemannRaw riemann_fd_raw(std::span<const double> q, double step = 0.0);

/// Finite-difference Gauss curvature R_1212 / det g for n = 2; the 2D leg of
/// the curvature oracle.
double gauss_curvature_fd_2d(std::span<const double> q, double step = 0.0);

/// The symmetric matrix Q of the reduced sectional-curvature quotient
/// kappa = <Q z, z> / <E z, z> with z the cross product of the spanning
/// vectors.
SmallMatrix q_form_3d(std::span<const double> q);

/// Sectional curvature of span{a, b} at q (n = 3), computed through the
/// cross-product reduction. Basis-invariant; DegeneratePlaneError when the
/// spanning vectors are numerically dependent.
double sectional_curvature_3d(std::span<const double> q, const TangentVector& a,
                              const TangentVector& b);

/// Eigenvalues of E^{-1} Q in closed form. Each is bounded above by 1/4;
/// lambda1 and lambda3 never exceed 1/12. A residual check against the
/// assembled matrices guards the transcription.
struct CurvatureEigenvalues {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;

    double max() const noexcept { return std::max(lambda1, std::max(lambda2, lambda3)); }
};
CurvatureEigenvalues curvature_eigenvalues(std::span<const double> q);

/// Residuals ||E^{-1} Q x - lambda x||_inf of the closed-form eigenvalues
/// with their computed eigenvectors.
std::array<double, 3> curvature_eigen_residuals(std::span<const double> q);

/// Largest eigenvalue of B^{-1} A for symmetric A and symmetric positive
/// definite B, with a maximizing vector. Bounds the Rayleigh quotient
/// <A z, z> / <B z, z> from above.
struct RayleighResult {
    double value = 0.0;
    std::vector<double> vector;
};
RayleighResult rayleigh_max(const SmallMatrix& a, const SmallMatrix& b);

} // namespace peakon

#endif
