#include "lapspec/theory.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <tuple>

#include "lapspec/charpoly.hpp"
#include "lapspec/eigen.hpp"
#include "lapspec/errors.hpp"

namespace lapspec {

namespace {

using Cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::string format_complex(Cplx z) {
    std::ostringstream out;
    out.precision(17);
    out << z.real() << (z.imag() < 0 ? " - " : " + ") << std::fabs(z.imag()) << "i";
    return out.str();
}

std::string format_complex_list(const std::vector<Cplx>& zs) {
    std::string out;
    for (const Cplx& z : zs) {
        if (!out.empty()) out += "; ";
        out += format_complex(z);
    }
    return out.empty() ? "(none)" : out;
}

/// Eigenvalues at least cluster_tol away from both 0 and 1.
std::vector<Cplx> drop_zero_one(const std::vector<Cplx>& zs, double cluster_tol) {
    std::vector<Cplx> out;
    for (const Cplx& z : zs)
        if (std::abs(z) > cluster_tol && std::abs(z - Cplx(1.0, 0.0)) > cluster_tol) out.push_back(z);
    return out;
}

/// Greedy minimal-distance multiset matching: all cross pairs sorted by
/// distance, endpoints consumed once.  Stable under eigenvalue reordering.
/// Returns the largest matched distance, infinity when sizes differ.
double greedy_match_distance(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    if (a.empty()) return 0.0;
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    pairs.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) pairs.emplace_back(std::abs(a[i] - b[j]), i, j);
    std::sort(pairs.begin(), pairs.end());
    std::vector<bool> used_a(a.size(), false);
    std::vector<bool> used_b(b.size(), false);
    double worst = 0.0;
    std::size_t matched = 0;
    for (const auto& [dist, i, j] : pairs) {
        if (used_a[i] || used_b[j]) continue;
        used_a[i] = true;
        used_b[j] = true;
        worst = std::max(worst, dist);
        if (++matched == a.size()) break;
    }
    return worst;
}

double vec_norm(const std::vector<Cplx>& v) {
    double s = 0.0;
    for (const Cplx& c : v) s += std::norm(c);
    return std::sqrt(s);
}

std::vector<Cplx> mat_apply(const DenseMatrix& m, const std::vector<Cplx>& v) {
    const int n = m.order();
    std::vector<Cplx> out(static_cast<std::size_t>(n), Cplx(0.0));
    for (int i = 0; i < n; ++i) {
        Cplx acc(0.0);
        for (int j = 0; j < n; ++j) acc += m(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

Cplx vec_mean(const std::vector<Cplx>& v) {
    Cplx s(0.0);
    for (const Cplx& c : v) s += c;
    return s / static_cast<double>(v.size());
}

} // namespace

void VerificationReport::require_le(const std::string& name, double value, double bound) {
    const bool ok = value <= bound;
    checks.push_back({name, value, bound, ok});
    pass = pass && ok;
}

void VerificationReport::require_eq(const std::string& name, long long measured, long long expected) {
    const bool ok = measured == expected;
    checks.push_back({name, static_cast<double>(measured), static_cast<double>(expected), ok});
    pass = pass && ok;
}

void VerificationReport::require_true(const std::string& name, bool ok) {
    checks.push_back({name, ok ? 1.0 : 0.0, 1.0, ok});
    pass = pass && ok;
}

void VerificationReport::witness(const std::string& name, std::string text) {
    witnesses.emplace_back(name, std::move(text));
}

VerificationReport verify_spectrum_correspondence(const StandardizedLaplacian& l, const TheoryOptions& opts) {
    VerificationReport report;
    report.theorem = "spectrum-correspondence";
    const int n = l.n;

    const DenseMatrix p = stochastic_companion(l);
    const StandardizedLaplacian lc = complementary_laplacian(l);

    EigenOptions eig;
    eig.tol = opts.eig_tol;
    eig.cluster_tol = opts.cluster_tol;
    const Spectrum spec_l = eigenvalues(l.matrix, eig);
    const Spectrum spec_p = eigenvalues(p, eig);
    const Spectrum spec_lc = eigenvalues(lc.matrix, eig);

    const std::vector<Cplx> core_l = drop_zero_one(spec_l.eigenvalues, opts.cluster_tol);
    const std::vector<Cplx> core_p = drop_zero_one(spec_p.eigenvalues, opts.cluster_tol);
    std::vector<Cplx> reflected_lc;
    for (const Cplx& z : spec_lc.eigenvalues) reflected_lc.push_back(Cplx(1.0, 0.0) - z);
    const std::vector<Cplx> core_lc = drop_zero_one(reflected_lc, opts.cluster_tol);

    report.require_eq("shared-spectrum-size-companion", static_cast<long long>(core_p.size()),
                      static_cast<long long>(core_l.size()));
    report.require_eq("shared-spectrum-size-complement", static_cast<long long>(core_lc.size()),
                      static_cast<long long>(core_l.size()));
    report.require_le("companion-match-distance", greedy_match_distance(core_l, core_p), opts.cluster_tol);
    report.require_le("complement-match-distance", greedy_match_distance(core_l, core_lc), opts.cluster_tol);
    report.witness("shared-eigenvalues", format_complex_list(core_l));

    // Eigenvector transform x = (I - J/(1-lambda)) v and its inverse
    // v' = (I - J/lambda) x, checked on every shared eigenvalue.
    double worst_p = 0.0;
    double worst_lc = 0.0;
    double worst_roundtrip = 0.0;
    for (const Cplx& lambda : core_l) {
        const std::vector<Cplx> v = eigenvector_for(l.matrix, lambda, opts.eig_tol);
        const Cplx mean = vec_mean(v);

        std::vector<Cplx> x = v;
        const Cplx shift = mean / (Cplx(1.0, 0.0) - lambda);
        for (Cplx& c : x) c -= shift;

        const std::vector<Cplx> px = mat_apply(p, x);
        const std::vector<Cplx> lcx = mat_apply(lc.matrix, x);
        double defect_p = 0.0;
        double defect_lc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            defect_p += std::norm(px[i] - lambda * x[i]);
            defect_lc += std::norm(lcx[i] - (Cplx(1.0, 0.0) - lambda) * x[i]);
        }
        worst_p = std::max(worst_p, std::sqrt(defect_p));
        worst_lc = std::max(worst_lc, std::sqrt(defect_lc));

        std::vector<Cplx> back = x;
        const Cplx back_shift = vec_mean(x) / lambda;
        for (Cplx& c : back) c -= back_shift;
        double roundtrip = 0.0;
        for (std::size_t i = 0; i < back.size(); ++i) roundtrip += std::norm(back[i] - v[i]);
        worst_roundtrip = std::max(worst_roundtrip, std::sqrt(roundtrip));
    }
    report.require_le("transformed-companion-residual", worst_p, opts.tol);
    report.require_le("transformed-complement-residual", worst_lc, opts.tol);
    report.require_le("transform-roundtrip-error", worst_roundtrip, opts.tol);
    (void)n;
    return report;
}

VerificationReport verify_charpoly_identities(const StandardizedLaplacian& l) {
    VerificationReport report;
    report.theorem = "charpoly-identities";
    const int n = l.n;

    const RationalMatrix& lm = l.exact_matrix();
    const RationalMatrix pm = exact_stochastic_companion(l);
    RationalMatrix lcm = exact_k_tilde(n);
    lcm -= lm;

    const Polynomial<Rat> f_l = char_poly_exact(lm);
    const Polynomial<Rat> f_p = char_poly_exact(pm);
    const Polynomial<Rat> f_lc = char_poly_exact(lcm);

    // lambda * f_P(lambda) = (lambda - 1) * f_L(lambda)
    const Polynomial<Rat> lhs1 = f_p.shifted(1);
    const Polynomial<Rat> rhs1 = f_l * Polynomial<Rat>(std::vector<Rat>{Rat(-1), Rat(1)});
    report.require_true("companion-factor-identity", lhs1 == rhs1);

    // (1 - lambda) * f_Lc(lambda) = (-1)^(n-1) * lambda * f_L(1 - lambda)
    const Polynomial<Rat> lhs2 = f_lc * Polynomial<Rat>(std::vector<Rat>{Rat(1), Rat(-1)});
    Polynomial<Rat> rhs2 = f_l.compose_affine(Rat(-1), Rat(1)).shifted(1);
    if (n % 2 == 0) rhs2 *= Rat(-1);
    report.require_true("complement-reflection-identity", lhs2 == rhs2);

    return report;
}

VerificationReport verify_semiconvergence(const StandardizedLaplacian& l, const TheoryOptions& opts) {
    VerificationReport report;
    report.theorem = "semiconvergence";
    const int n = l.n;

    const DenseMatrix p = stochastic_companion(l);

    EigenOptions eig;
    eig.tol = opts.eig_tol;
    eig.cluster_tol = opts.cluster_tol;
    eig.residuals = false;
    const Spectrum spec_p = eigenvalues(p, eig);

    double radius = 0.0;
    double unit_defect = 0.0;
    for (const Cplx& z : spec_p.eigenvalues) {
        radius = std::max(radius, std::abs(z));
        if (std::abs(z) >= 1.0 - opts.tol) unit_defect = std::max(unit_defect, std::abs(z - Cplx(1.0, 0.0)));
    }
    report.require_le("companion-spectral-radius", radius, 1.0 + opts.tol);
    report.require_le("unit-modulus-eigenvalue-is-one", unit_defect, opts.cluster_tol);

    DenseMatrix eye_minus_p = DenseMatrix::identity(n);
    eye_minus_p -= p;
    report.require_eq("rank-of-squared-defect", rank(eye_minus_p * eye_minus_p, opts.rank_tol),
                      rank(eye_minus_p, opts.rank_tol));

    const PowerLimit p_lim = matrix_power_limit(p, opts.tol, opts.max_k);
    const PowerLimit l_lim = matrix_power_limit(l.matrix, opts.tol, opts.max_k);
    report.require_true("companion-powers-converge", p_lim.limit.has_value());
    report.require_true("laplacian-powers-converge", l_lim.limit.has_value());

    if (p_lim.limit && l_lim.limit) {
        // lim L^k = (P - J) lim P^(k-1); the k-1 limit equals the k limit.
        DenseMatrix factor = p;
        factor -= j_bar(n);
        const double defect = max_abs_diff(*l_lim.limit, factor * *p_lim.limit);
        report.require_le("power-limit-identity", defect, 10.0 * opts.tol);
        report.witness("companion-limit-power", std::to_string(p_lim.effective_power));
        report.witness("laplacian-limit-power", std::to_string(l_lim.effective_power));
    }
    return report;
}

VerificationReport verify_multiplicities(const WeightedDigraph& g, const TheoryOptions& opts) {
    VerificationReport report;
    report.theorem = "multiplicities";
    const int n = g.order();

    const int d = in_forest_dimension(g);
    const int d_c = in_forest_dimension(complement(g));
    report.witness("in-forest-dimension", std::to_string(d));
    report.witness("complement-in-forest-dimension", std::to_string(d_c));

    const StandardizedLaplacian l = standardize(g);
    const StandardizedLaplacian lc = complementary_laplacian(l);
    const DenseMatrix p = stochastic_companion(l);
    const RationalMatrix p_exact = exact_stochastic_companion(l);

    // Exact algebraic multiplicities: vanishing order of the characteristic
    // polynomial at 0 (trailing zero coefficients) and at 1 (synthetic
    // division), in rational arithmetic.
    const Polynomial<Rat> f_l = char_poly_exact(l.exact_matrix());
    const Polynomial<Rat> f_p = char_poly_exact(p_exact);
    const Polynomial<Rat> f_lc = char_poly_exact(lc.exact_matrix());
    const int m_l_0 = f_l.root_multiplicity_at_zero();
    const int m_l_1 = f_l.root_multiplicity(Rat(1));
    const int m_p_0 = f_p.root_multiplicity_at_zero();
    const int m_p_1 = f_p.root_multiplicity(Rat(1));
    const int m_lc_0 = f_lc.root_multiplicity_at_zero();
    const int m_lc_1 = f_lc.root_multiplicity(Rat(1));

    report.require_eq("laplacian-multiplicity-at-zero", m_l_0, d);
    report.require_eq("laplacian-multiplicity-at-one", m_l_1, d_c - 1);
    report.require_eq("companion-multiplicity-at-zero", m_p_0, d - 1);
    report.require_eq("companion-multiplicity-at-one", m_p_1, d_c);
    report.require_eq("complement-multiplicity-at-one", m_lc_1, d - 1);
    report.require_eq("complement-multiplicity-at-zero", m_lc_0, d_c);

    // Cross-mode agreement: float eigenvalue clusters near 0 and 1 must
    // count the same multiplicities as the exact arbiter.
    EigenOptions eig;
    eig.tol = opts.eig_tol;
    eig.cluster_tol = opts.cluster_tol;
    eig.residuals = false;
    const Spectrum spec_l = eigenvalues(l.matrix, eig);
    const Spectrum spec_p = eigenvalues(p, eig);
    const Spectrum spec_lc = eigenvalues(lc.matrix, eig);
    const Cplx one(1.0, 0.0);
    const bool float_agrees = spec_l.multiplicity_near(Cplx(0.0), opts.cluster_tol) == m_l_0 &&
                              spec_l.multiplicity_near(one, opts.cluster_tol) == m_l_1 &&
                              spec_p.multiplicity_near(Cplx(0.0), opts.cluster_tol) == m_p_0 &&
                              spec_p.multiplicity_near(one, opts.cluster_tol) == m_p_1 &&
                              spec_lc.multiplicity_near(Cplx(0.0), opts.cluster_tol) == m_lc_0 &&
                              spec_lc.multiplicity_near(one, opts.cluster_tol) == m_lc_1;
    report.require_true("float-clusters-agree-with-exact", float_agrees);

    // Semisimplicity at 0 and 1: geometric multiplicity n - rank(A - t*I)
    // equals the algebraic one.
    const auto geometric = [&](const DenseMatrix& m, double t) {
        DenseMatrix shifted = m;
        for (int i = 0; i < n; ++i) shifted(i, i) -= t;
        return n - rank(shifted, opts.rank_tol);
    };
    report.require_eq("laplacian-semisimple-at-zero", geometric(l.matrix, 0.0), m_l_0);
    report.require_eq("laplacian-semisimple-at-one", geometric(l.matrix, 1.0), m_l_1);
    report.require_eq("companion-semisimple-at-zero", geometric(p, 0.0), m_p_0);
    report.require_eq("companion-semisimple-at-one", geometric(p, 1.0), m_p_1);
    report.require_eq("complement-semisimple-at-zero", geometric(lc.matrix, 0.0), m_lc_0);
    report.require_eq("complement-semisimple-at-one", geometric(lc.matrix, 1.0), m_lc_1);

    // Eigenspace mappings: K v lands in ker P for v in ker L (equivalently
    // the 1-eigenspace of the complement), and K x lands in the 1-eigenspace
    // of L for x fixed by P.  The K-image is skipped when numerically zero.
    const DenseMatrix kt = k_tilde(n);
    const auto apply_real = [&](const DenseMatrix& m, const std::vector<double>& v) {
        std::vector<double> out(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += m(i, j) * v[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = acc;
        }
        return out;
    };
    const auto norm2 = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double c : v) s += c * c;
        return std::sqrt(s);
    };

    double worst_p_kernel = 0.0;
    double worst_lc_fixed = 0.0;
    for (const std::vector<double>& v : kernel_basis(l.matrix, opts.rank_tol)) {
        std::vector<double> kv = apply_real(kt, v);
        const double len = norm2(kv);
        if (len <= 1e-8) continue;
        for (double& c : kv) c /= len;
        worst_p_kernel = std::max(worst_p_kernel, norm2(apply_real(p, kv)));
        std::vector<double> lckv = apply_real(lc.matrix, kv);
        for (int i = 0; i < n; ++i) lckv[static_cast<std::size_t>(i)] -= kv[static_cast<std::size_t>(i)];
        worst_lc_fixed = std::max(worst_lc_fixed, norm2(lckv));
    }
    report.require_le("laplacian-kernel-maps-into-companion-kernel", worst_p_kernel, opts.tol);
    report.require_le("laplacian-kernel-maps-into-complement-fixed-space", worst_lc_fixed, opts.tol);

    DenseMatrix p_minus_i = p;
    for (int i = 0; i < n; ++i) p_minus_i(i, i) -= 1.0;
    double worst_l_fixed = 0.0;
    for (const std::vector<double>& x : kernel_basis(p_minus_i, opts.rank_tol)) {
        std::vector<double> kx = apply_real(kt, x);
        const double len = norm2(kx);
        if (len <= 1e-8) continue;
        for (double& c : kx) c /= len;
        std::vector<double> lkx = apply_real(l.matrix, kx);
        for (int i = 0; i < n; ++i) lkx[static_cast<std::size_t>(i)] -= kx[static_cast<std::size_t>(i)];
        worst_l_fixed = std::max(worst_l_fixed, norm2(lkx));
    }
    report.require_le("companion-fixed-space-maps-into-laplacian-one-space", worst_l_fixed, opts.tol);

    return report;
}

VerificationReport verify_hamiltonian_extremal(int n, const TheoryOptions& opts) {
    if (n < 3) throw BadIndexError("the extremal-cycle check needs order >= 3, got " + std::to_string(n));
    VerificationReport report;
    report.theorem = "hamiltonian-extremal";

    const StandardizedLaplacian l = l_k_matrix(n, 1);  // (1/n)(I - Q)

    EigenOptions eig;
    eig.tol = opts.eig_tol;
    eig.cluster_tol = opts.cluster_tol;
    eig.residuals = false;
    const Spectrum spec = eigenvalues(l.matrix, eig);

    const double target_arg = kPi / 2.0 - kPi / n;
    int hits = 0;
    Cplx extremal(0.0);
    double best_gap = std::numeric_limits<double>::infinity();
    for (const Cplx& z : spec.eigenvalues) {
        if (z == Cplx(0.0)) continue;
        const double gap = std::fabs(std::arg(z) - target_arg);
        if (gap <= 1e-9) ++hits;
        if (gap < best_gap) {
            best_gap = gap;
            extremal = z;
        }
    }
    report.require_eq("extremal-angle-eigenvalue-count", hits, 1);
    report.witness("extremal-eigenvalue", format_complex(extremal));

    report.require_le("extremal-angle-error", best_gap, 1e-9);
    report.require_le("extremal-modulus-error",
                      std::fabs(std::abs(extremal) - 2.0 / n * std::sin(kPi / n)), 1e-9);
    report.require_le("extremal-imaginary-part-error",
                      std::fabs(extremal.imag() - std::sin(2.0 * kPi / n) / n), 1e-9);

    // The eigenvector is the vector of n-th roots of unity: dividing out the
    // first entry removes the arbitrary phase and scale.
    const std::vector<Cplx> v = eigenvector_for(l.matrix, extremal, opts.eig_tol);
    double worst_entry = std::numeric_limits<double>::infinity();
    if (std::abs(v[0]) > 0.0) {
        worst_entry = 0.0;
        for (int j = 0; j < n; ++j) {
            const Cplx expected = std::polar(1.0, -2.0 * kPi * j / n);
            worst_entry = std::max(worst_entry, std::abs(v[static_cast<std::size_t>(j)] / v[0] - expected));
        }
    }
    report.require_le("eigenvector-roots-of-unity-error", worst_entry, 1e-6);
    return report;
}

} // namespace lapspec
