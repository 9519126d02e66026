#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lapspec/graph.hpp"
#include "lapspec/matrix.hpp"
#include "lapspec/rational.hpp"

namespace lapspec {

/// Construction tag, recorded for reporting; no math path consults it.
enum class Provenance { FromDigraph, Sampled, LkFamily, ConvexCombination };

std::string to_string(Provenance p);

/// A standardized Laplacian: zero row sums, off-diagonal entries in
/// [-1/n, 0], diagonal entries in [0, 1 - 1/n].  When built from exact
/// sources the rational matrix rides along and the float view is its
/// rounding, so exact and float paths can be cross-checked.
struct StandardizedLaplacian {
    DenseMatrix matrix{1};
    int n = 1;
    Provenance provenance = Provenance::FromDigraph;
    std::optional<RationalMatrix> exact;

    bool is_exact() const { return exact.has_value(); }
    /// Exact entries; ExactModeRequiredError when this value is float-only.
    const RationalMatrix& exact_matrix() const;
};

/// Validators; throw InvariantViolationError naming the violated bound.
void validate_standardized(const DenseMatrix& m, double tol = 1e-12);
void validate_standardized_exact(const RationalMatrix& m);

/// Wrap a float matrix after validation.
StandardizedLaplacian make_standardized(DenseMatrix m, Provenance provenance, double tol = 1e-12);
/// Wrap an exact matrix after exact validation; the float view is its rounding.
StandardizedLaplacian make_standardized(RationalMatrix m, Provenance provenance);

/// Laplacian L of a weighted digraph: off-diagonal -w_ij, diagonal the
/// negated off-diagonal row sum (rows sum to zero).
DenseMatrix laplacian_of(const WeightedDigraph& g);
RationalMatrix exact_laplacian_of(const WeightedDigraph& g);

/// Standardized Laplacian (nb)^{-1} L, exact-backed.
StandardizedLaplacian standardize(const WeightedDigraph& g);

/// All-1/n matrix and its complement K = I - J (the standardized Laplacian
/// of the complete digraph).
DenseMatrix j_bar(int n);
DenseMatrix k_tilde(int n);
RationalMatrix exact_j_bar(int n);
RationalMatrix exact_k_tilde(int n);

/// Stochastic companion P = L + J: nonnegative with unit row sums.
DenseMatrix stochastic_companion(const StandardizedLaplacian& l);
RationalMatrix exact_stochastic_companion(const StandardizedLaplacian& l);

/// Complementary Laplacian K - L; exactness follows the input.
StandardizedLaplacian complementary_laplacian(const StandardizedLaplacian& l);

/// Circulant permutation matrix of the n-cycle: entry (k, j) = 1 when
/// j - k is 1 or 1 - n.
DenseMatrix circulant_q(int n);

/// L_k = (1/n)(k I - Q - Q^2 - ... - Q^k) for 1 <= k <= n-1; exact-backed.
StandardizedLaplacian l_k_matrix(int n, int k);

/// Convex combination of standardized Laplacians, revalidated.  The result
/// is exact-backed when every input is and the coefficients (read exactly as
/// binary rationals) sum to exactly 1.
StandardizedLaplacian convex_combination(const std::vector<double>& coeffs,
                                         const std::vector<const StandardizedLaplacian*>& matrices);

} // namespace lapspec
