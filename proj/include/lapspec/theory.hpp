#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lapspec/graph.hpp"
#include "lapspec/laplacian.hpp"

namespace lapspec {

/// One measured claim: pass is recorded explicitly because equality checks
/// and upper-bound checks share this shape.
struct CheckResult {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::string theorem;  // descriptive id, e.g. "spectrum-correspondence"
    bool pass = true;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> witnesses;

    /// value <= bound.
    void require_le(const std::string& name, double value, double bound);
    /// measured == expected (integers compared exactly).
    void require_eq(const std::string& name, long long measured, long long expected);
    /// explicit boolean claim.
    void require_true(const std::string& name, bool ok);
    void witness(const std::string& name, std::string text);
};

struct TheoryOptions {
    double tol = 1e-8;         // residual and limit comparisons
    double cluster_tol = 1e-6; // multiset matching and the {0, 1} filter
    double rank_tol = 1e-9;
    double eig_tol = 1e-10;    // eigensolver stop
    long long max_k = 1000000; // power-limit budget
};

/// The spectra of L, P and the complement agree away from {0, 1}, the affine
/// eigenvector transform x = (I - J/(1-lambda)) v carries eigenvectors of L
/// onto eigenvectors of P (eigenvalue lambda) and of the complement
/// (eigenvalue 1-lambda), and v' = (I - J/lambda) x inverts it.
VerificationReport verify_spectrum_correspondence(const StandardizedLaplacian& l,
                                                  const TheoryOptions& opts = {});

/// Exact polynomial identities lambda*f_P = (lambda-1)*f_L and
/// (1-lambda)*f_Lc = (-1)^(n-1) * lambda * f_L(1-lambda), coefficient by
/// coefficient in rational arithmetic.  Requires an exact-backed input.
VerificationReport verify_charpoly_identities(const StandardizedLaplacian& l);

/// Semiconvergence of P and L: spectral radius 1, the only unit-modulus
/// eigenvalue is 1, rank(I-P)^2 = rank(I-P), both power limits exist, and
/// lim L^k = (P - J) lim P^(k-1).
VerificationReport verify_semiconvergence(const StandardizedLaplacian& l, const TheoryOptions& opts = {});

/// Eigenvalue multiplicities at 0 and 1 of L, P and the complement equal the
/// in-forest dimensions d and d_c of the digraph and its complement
/// (exact-rational arbiter), the six eigenvalues are semisimple, and the
/// K-image mappings between the eigenspaces hold.
VerificationReport verify_multiplicities(const WeightedDigraph& g, const TheoryOptions& opts = {});

/// The cycle digraph attains the extremal angle: L = (1/n)(I - Q) has a
/// unique eigenvalue of argument pi/2 - pi/n, with the predicted modulus and
/// imaginary part, and its eigenvector is the vector of n-th roots of unity.
VerificationReport verify_hamiltonian_extremal(int n, const TheoryOptions& opts = {});

} // namespace lapspec
