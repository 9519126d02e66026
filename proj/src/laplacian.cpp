#include "lapspec/laplacian.hpp"

#include <cmath>
#include <string>

#include "lapspec/errors.hpp"

namespace lapspec {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::FromDigraph: return "from-digraph";
        case Provenance::Sampled: return "sampled";
        case Provenance::LkFamily: return "L_k";
        case Provenance::ConvexCombination: return "convex-combination";
    }
    return "unknown";
}

const RationalMatrix& StandardizedLaplacian::exact_matrix() const {
    if (!exact)
        throw ExactModeRequiredError("this standardized Laplacian was built in float mode (" +
                                     to_string(provenance) + "); an exact-rational construction is required");
    return *exact;
}

namespace {

[[noreturn]] void bound_violation(const std::string& what, int i, int j, const std::string& value) {
    throw InvariantViolationError("standardized Laplacian " + what + " at (" + std::to_string(i) + ", " +
                                  std::to_string(j) + "): " + value);
}

} // namespace

void validate_standardized(const DenseMatrix& m, double tol) {
    const int n = m.order();
    const double off_low = -1.0 / n - tol;
    const double diag_high = 1.0 - 1.0 / n + tol;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            const double e = m(i, j);
            row += e;
            if (i == j) {
                if (e < -tol || e > diag_high)
                    bound_violation("diagonal entry outside [0, 1 - 1/n]", i, j, std::to_string(e));
            } else {
                if (e < off_low || e > tol)
                    bound_violation("off-diagonal entry outside [-1/n, 0]", i, j, std::to_string(e));
            }
        }
        if (std::fabs(row) > tol)
            bound_violation("row sum not zero", i, i, std::to_string(row));
    }
}

void validate_standardized_exact(const RationalMatrix& m) {
    const int n = m.order();
    const Rat off_low(-1, n);
    const Rat diag_high = Rat(n - 1, n);
    for (int i = 0; i < n; ++i) {
        Rat row = 0;
        for (int j = 0; j < n; ++j) {
            const Rat& e = m(i, j);
            row += e;
            if (i == j) {
                if (e < 0 || e > diag_high)
                    bound_violation("diagonal entry outside [0, 1 - 1/n]", i, j, rational_to_string(e));
            } else {
                if (e < off_low || e > 0)
                    bound_violation("off-diagonal entry outside [-1/n, 0]", i, j, rational_to_string(e));
            }
        }
        if (row != 0)
            bound_violation("row sum not zero", i, i, rational_to_string(row));
    }
}

StandardizedLaplacian make_standardized(DenseMatrix m, Provenance provenance, double tol) {
    validate_standardized(m, tol);
    const int n = m.order();
    return StandardizedLaplacian{std::move(m), n, provenance, std::nullopt};
}

StandardizedLaplacian make_standardized(RationalMatrix m, Provenance provenance) {
    validate_standardized_exact(m);
    const int n = m.order();
    DenseMatrix as_float = to_double_matrix(m);
    return StandardizedLaplacian{std::move(as_float), n, provenance, std::move(m)};
}

RationalMatrix exact_laplacian_of(const WeightedDigraph& g) {
    RationalMatrix l(g.order());
    for (const Arc& a : g.arcs()) {
        l(a.source, a.target) = -a.weight;
        l(a.source, a.source) += a.weight;
    }
    return l;
}

DenseMatrix laplacian_of(const WeightedDigraph& g) { return to_double_matrix(exact_laplacian_of(g)); }

StandardizedLaplacian standardize(const WeightedDigraph& g) {
    const int n = g.order();
    RationalMatrix l = exact_laplacian_of(g);
    const Rat scale = Rat(1) / (Rat(n) * g.bound());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) l(i, j) *= scale;
    return make_standardized(std::move(l), Provenance::FromDigraph);
}

DenseMatrix j_bar(int n) { return to_double_matrix(exact_j_bar(n)); }

DenseMatrix k_tilde(int n) { return to_double_matrix(exact_k_tilde(n)); }

RationalMatrix exact_j_bar(int n) {
    if (n < 1) throw BadIndexError("matrix order must be at least 1, got " + std::to_string(n));
    RationalMatrix j(n);
    const Rat e(1, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) j(i, k) = e;
    return j;
}

RationalMatrix exact_k_tilde(int n) {
    RationalMatrix k = exact_j_bar(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) k(i, j) = (i == j ? Rat(1) : Rat(0)) - k(i, j);
    return k;
}

DenseMatrix stochastic_companion(const StandardizedLaplacian& l) {
    const int n = l.n;
    DenseMatrix p = l.matrix;
    const double inv_n = 1.0 / n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) += inv_n;

    // A valid L makes P stochastic by construction; a failure here means the
    // input was corrupted, not merely inaccurate.
    constexpr double tol = 1e-12;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            if (p(i, j) < -tol)
                throw InvariantViolationError("stochastic companion has negative entry " + std::to_string(p(i, j)));
            row += p(i, j);
        }
        if (std::fabs(row - 1.0) > tol)
            throw InvariantViolationError("stochastic companion row sum " + std::to_string(row) + " is not 1");
    }
    return p;
}

RationalMatrix exact_stochastic_companion(const StandardizedLaplacian& l) {
    const RationalMatrix& m = l.exact_matrix();
    const int n = l.n;
    RationalMatrix p = m;
    const Rat inv_n(1, n);
    for (int i = 0; i < n; ++i) {
        Rat row = 0;
        for (int j = 0; j < n; ++j) {
            p(i, j) += inv_n;
            if (p(i, j) < 0)
                throw InvariantViolationError("stochastic companion has negative entry " +
                                              rational_to_string(p(i, j)));
            row += p(i, j);
        }
        if (row != 1) throw InvariantViolationError("stochastic companion row sum is not 1");
    }
    return p;
}

StandardizedLaplacian complementary_laplacian(const StandardizedLaplacian& l) {
    const int n = l.n;
    if (l.is_exact()) {
        RationalMatrix c = exact_k_tilde(n);
        c -= l.exact_matrix();
        return make_standardized(std::move(c), l.provenance);
    }
    DenseMatrix c = k_tilde(n);
    c -= l.matrix;
    return make_standardized(std::move(c), l.provenance);
}

DenseMatrix circulant_q(int n) {
    if (n < 2) throw BadIndexError("circulant permutation needs order >= 2, got " + std::to_string(n));
    DenseMatrix q(n);
    for (int k = 0; k < n; ++k) q(k, (k + 1) % n) = 1.0;
    return q;
}

StandardizedLaplacian l_k_matrix(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw BadIndexError("L_k needs 1 <= k <= n-1 with n >= 2, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
    // Entry (i, j) is k/n on the diagonal and -1/n when j is one of the k
    // cyclic successors of i.
    RationalMatrix m(n);
    const Rat off(-1, n);
    const Rat diag(k, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = diag;
        for (int s = 1; s <= k; ++s) m(i, (i + s) % n) = off;
    }
    return make_standardized(std::move(m), Provenance::LkFamily);
}

StandardizedLaplacian convex_combination(const std::vector<double>& coeffs,
                                         const std::vector<const StandardizedLaplacian*>& matrices) {
    if (coeffs.empty() || coeffs.size() != matrices.size())
        throw NotConvexError("need matching, nonempty coefficient and matrix lists");
    const int n = matrices.front()->n;
    double sum = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!(coeffs[i] >= 0.0)) throw NotConvexError("coefficient " + std::to_string(coeffs[i]) + " is negative");
        if (matrices[i]->n != n) throw NotConvexError("matrix orders differ");
        sum += coeffs[i];
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw NotConvexError("coefficients sum to " + std::to_string(sum) + ", not 1");

    bool all_exact = true;
    Rat exact_sum = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        all_exact = all_exact && matrices[i]->is_exact();
        exact_sum += rational_from_double(coeffs[i]);
    }

    if (all_exact && exact_sum == 1) {
        RationalMatrix acc(n);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const Rat c = rational_from_double(coeffs[i]);
            const RationalMatrix& m = matrices[i]->exact_matrix();
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) acc(r, s) += c * m(r, s);
        }
        return make_standardized(std::move(acc), Provenance::ConvexCombination);
    }

    DenseMatrix acc(n);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s) acc(r, s) += coeffs[i] * matrices[i]->matrix(r, s);
    return make_standardized(std::move(acc), Provenance::ConvexCombination);
}

} // namespace lapspec
