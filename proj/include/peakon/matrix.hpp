#ifndef PEAKON_MATRIX_HPP
#define PEAKON_MATRIX_HPP

#include <span>
#include <vector>

#include "peakon/errors.hpp"

namespace peakon {

/// Dense symmetric n x n matrix for the small dimensions used here (n <= 3 in
/// practice, the code is generic). Row-major storage, value semantics.
class SmallMatrix {
public:
    explicit SmallMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    static SmallMatrix identity(int n);

    int size() const noexcept { return n_; }

    double operator()(int i, int j) const noexcept { return a_[idx(i, j)]; }
    double& operator()(int i, int j) noexcept { return a_[idx(i, j)]; }

    // Sets entries (i,j) and (j,i); keeps the matrix symmetric by construction.
    void set_sym(int i, int j, double v) noexcept {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }

    bool is_symmetric() const noexcept;

    std::vector<double> multiply(std::span<const double> x) const;

    // Solves A x = b by Gaussian elimination with partial pivoting.
    // Throws SingularMatrixError if a pivot vanishes.
    std::vector<double> solve(std::span<const double> b) const;

    // Inverse through n right-hand sides; long double elimination internally.
    SmallMatrix inverse() const;

    double max_abs() const noexcept;

private:
    std::size_t idx(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * n_ + j;
    }
    int n_;
    std::vector<double> a_;
};

/// Gram matrix E(q) with entries e^{-|q_i - q_j|}. Requires q strictly
/// decreasing and finite; the result is symmetric positive definite with
/// unit diagonal and off-diagonal entries in (0, 1].
SmallMatrix e_matrix(std::span<const double> q);

/// Metric matrix g(q) = E(q)^{-1}. Closed forms for n = 1, 2, 3; generic
/// linear solve otherwise. A residual check on g*E - I guards against
/// points too close to the coincidence set; failure raises
/// SingularMatrixError.
SmallMatrix metric_matrix(std::span<const double> q);

/// Max-norm of g*E - I, evaluated in extended precision. Exposed so tests
/// and the self-check suite can audit the inverse quality directly.
double metric_residual(const SmallMatrix& g, const SmallMatrix& e);

/// Cholesky factor L (lower) of a symmetric positive definite matrix.
/// Throws NotPositiveDefiniteError if a pivot is not strictly positive.
SmallMatrix cholesky(const SmallMatrix& b);

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns eigenvalues (ascending) and the matching unit eigenvectors as
/// columns of `vectors`.
struct SymmetricEigen {
    std::vector<double> values;
    SmallMatrix vectors;
};
SymmetricEigen symmetric_eigen(const SmallMatrix& a);

} // namespace peakon

#endif
