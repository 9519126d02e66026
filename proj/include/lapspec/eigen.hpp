#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lapspec/matrix.hpp"

namespace lapspec {

struct EigenOptions {
    /// Residual bound is tol * max(1, ||M||_F).
    double tol = 1e-10;
    /// Eigenvalues closer than this are grouped into one multiplicity cluster.
    double cluster_tol = 1e-6;
    /// Total QR sweep budget; 0 means 100 * n.
    int max_sweeps = 0;
    /// Skip inverse-iteration residuals (eigenvalues and clusters only).
    bool residuals = true;
};

/// Complex spectrum of a real matrix. Eigenvalues are sorted by (re, im);
/// complex values occur in exactly conjugate pairs because each pair is
/// produced by a single 2x2 QR block.
struct Spectrum {
    std::vector<std::complex<double>> eigenvalues;
    std::vector<double> residuals;     // ||Mv - lambda v||_2 of an inverse-iteration vector
    std::vector<int> cluster_ids;      // per eigenvalue
    std::vector<int> cluster_sizes;    // per cluster id (algebraic multiplicity of the cluster)

    int order() const { return static_cast<int>(eigenvalues.size()); }
    /// Number of eigenvalues within `radius` of `center`.
    int multiplicity_near(std::complex<double> center, double radius) const;
    double max_residual() const;
};

/// Full dense spectrum: balance, Householder reduction to Hessenberg form,
/// Francis double-shift QR with exceptional shifts every 10 stalled sweeps.
/// Throws NoConvergenceError when the sweep budget is exhausted.
Spectrum eigenvalues(const DenseMatrix& m, const EigenOptions& opts = {});

/// Unit eigenvector by inverse iteration with complex shift; the returned
/// vector v satisfies ||Mv - lambda v||_2 <= tol * max(1, ||M||_F), else
/// NotAnEigenvalueError.
std::vector<std::complex<double>> eigenvector_for(const DenseMatrix& m,
                                                  std::complex<double> lambda,
                                                  double tol = 1e-10);

/// Best inverse-iteration residual ||Mv - lambda v||_2 over unit vectors v
/// tried; never throws.  Small iff lambda is numerically an eigenvalue.
double eigen_residual(const DenseMatrix& m, std::complex<double> lambda);

/// Numerical rank via Householder QR with column pivoting: the number of
/// diagonal entries of R above rank_tol * |R_00|.
int rank(const DenseMatrix& m, double rank_tol = 1e-9);
int rank(const ComplexMatrix& m, double rank_tol = 1e-9);

/// Orthonormal basis of the (right) null space at the same rank tolerance.
std::vector<std::vector<double>> kernel_basis(const DenseMatrix& m, double rank_tol = 1e-9);

struct PowerLimit {
    std::optional<DenseMatrix> limit;  // empty when the power sequence diverges
    long long effective_power = 0;     // power of the returned iterate on success
    double final_delta = 0.0;          // ||M^{k+1} - M^k||_inf at the convergence test
};

/// Limit of M^k by repeated squaring.  Convergence is detected when
/// ||M^{k+1} - M^k||_inf <= tol (consecutive powers, so oscillating
/// sequences are not mistaken for convergent ones); the iterate is then
/// squared further, up to max_k, until it is stationary to machine
/// precision, since the successive difference underestimates the distance
/// to the limit when the slowest transient mode is close to 1.
PowerLimit matrix_power_limit(const DenseMatrix& m, double tol, long long max_k);

/// Least k >= 0 with rank(M^{k+1}) == rank(M^k).
int index_of(const DenseMatrix& m, double rank_tol = 1e-9);

double spectral_radius(const DenseMatrix& m, const EigenOptions& opts = {});

} // namespace lapspec
