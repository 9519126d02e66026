#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "lapspec/charpoly.hpp"
#include "lapspec/eigen.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/laplacian.hpp"
#include "lapspec/rng.hpp"
#include "lapspec/sampling.hpp"

using namespace lapspec;
using std::numbers::pi;
using Complex = std::complex<double>;

namespace {

DenseMatrix random_matrix(int n, SplitMix64& rng, double scale = 1.0) {
    DenseMatrix m(n);
    for (double& v : m.data()) v = scale * (2.0 * rng.next_double() - 1.0);
    return m;
}

/// Circulant matrix with first row c: entry (i, j) = c[(j - i) mod n].  Its
/// spectrum is known in closed form: sum_j c_j * omega^{jk} for the n-th
/// roots of unity omega^k.
DenseMatrix circulant(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size());
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = c[static_cast<std::size_t>((j - i + n) % n)];
    return m;
}

std::vector<Complex> circulant_spectrum(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size());
    std::vector<Complex> out;
    for (int k = 0; k < n; ++k) {
        Complex s = 0;
        for (int j = 0; j < n; ++j)
            s += c[static_cast<std::size_t>(j)] *
                 std::exp(Complex(0, 2.0 * pi * k * j / n));
        out.push_back(s);
    }
    return out;
}

/// Companion matrix of x^d + a_{d-1} x^{d-1} + ... + a_0 (a has size d).
DenseMatrix companion(const std::vector<double>& a) {
    const int d = static_cast<int>(a.size());
    DenseMatrix m(d);
    for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) m(i, d - 1) = -a[static_cast<std::size_t>(i)];
    return m;
}

/// Greedy multiset match, valid because tolerances are far below spacing.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    REQUIRE(a.size() == b.size());
    double worst = 0;
    for (const Complex& x : a) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < b.size(); ++i)
            if (std::abs(b[i] - x) < std::abs(b[best] - x)) best = i;
        worst = std::max(worst, std::abs(b[best] - x));
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

/// Determinant by exact rational Gaussian elimination -- an oracle
/// independent of the characteristic-polynomial recurrence.
Rat det_exact(RationalMatrix m) {
    const int n = m.order();
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m(r, col) != Rat(0)) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m(r, col) == Rat(0)) continue;
            const Rat f = m(r, col) / m(col, col);
            for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det;
}

} // namespace

TEST_CASE("spectrum of fixed matrices with known eigenvalues") {
    SUBCASE("zero matrix") {
        const Spectrum s = eigenvalues(DenseMatrix(4));
        REQUIRE(s.order() == 4);
        for (const Complex& z : s.eigenvalues) CHECK(std::abs(z) == 0.0);
        CHECK(s.cluster_sizes == std::vector<int>{4});
    }
    SUBCASE("K of order 4 has eigenvalues 0, 1, 1, 1") {
        const Spectrum s = eigenvalues(k_tilde(4));
        REQUIRE(s.order() == 4);
        CHECK(std::abs(s.eigenvalues[0]) < 1e-12);
        for (int i = 1; i < 4; ++i) CHECK(std::abs(s.eigenvalues[i] - 1.0) < 1e-12);
        CHECK(s.multiplicity_near(Complex(1, 0), 1e-6) == 3);
        CHECK(s.multiplicity_near(Complex(0, 0), 1e-6) == 1);
    }
    SUBCASE("cycle Laplacian (1/3)(I - Q) has eigenvalues (1/3)(1 - omega^k)") {
        const DenseMatrix m = to_double_matrix(l_k_matrix(3, 1).exact_matrix());
        const Spectrum s = eigenvalues(m);
        std::vector<Complex> expect;
        for (int k = 0; k < 3; ++k)
            expect.push_back((1.0 - std::exp(Complex(0, 2.0 * pi * k / 3))) / 3.0);
        CHECK(multiset_distance(s.eigenvalues, expect) < 1e-12);
    }
}

TEST_CASE("circulant matrices match the closed-form spectrum") {
    for (int n = 2; n <= 12; ++n) {
        SplitMix64 rng = trial_rng(7, static_cast<std::uint64_t>(n));
        std::vector<double> c(static_cast<std::size_t>(n));
        for (double& v : c) v = 2.0 * rng.next_double() - 1.0;
        const Spectrum s = eigenvalues(circulant(c));
        CHECK(multiset_distance(s.eigenvalues, circulant_spectrum(c)) < 1e-9);
    }
}

TEST_CASE("companion matrices match the polynomial roots") {
    SUBCASE("real roots 1, 2, 3") {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        const Spectrum s = eigenvalues(companion({-6, 11, -6}));
        CHECK(multiset_distance(s.eigenvalues, {Complex(1), Complex(2), Complex(3)}) < 1e-10);
    }
    SUBCASE("complex pair i, -i and real root 2") {
        // (x^2+1)(x-2) = x^3 - 2x^2 + x - 2
        const Spectrum s = eigenvalues(companion({-2, 1, -2}));
        CHECK(multiset_distance(s.eigenvalues, {Complex(0, 1), Complex(0, -1), Complex(2)}) <
              1e-10);
    }
}

TEST_CASE("eigenvalues are sorted and complex values pair into exact conjugates") {
    for (std::uint64_t t = 0; t < 20; ++t) {
        SplitMix64 rng = trial_rng(13, t);
        const Spectrum s = eigenvalues(random_matrix(3 + static_cast<int>(t % 7), rng));
        for (int i = 1; i < s.order(); ++i) {
            const Complex a = s.eigenvalues[static_cast<std::size_t>(i - 1)];
            const Complex b = s.eigenvalues[static_cast<std::size_t>(i)];
            CHECK((a.real() < b.real() || (a.real() == b.real() && a.imag() <= b.imag())));
        }
        std::vector<Complex> nonreal;
        for (const Complex& z : s.eigenvalues)
            if (z.imag() != 0.0) nonreal.push_back(z);
        CHECK(nonreal.size() % 2 == 0);
        std::sort(nonreal.begin(), nonreal.end(), [](Complex a, Complex b) {
            return a.real() != b.real() ? a.real() < b.real()
                                        : std::fabs(a.imag()) != std::fabs(b.imag())
                                              ? std::fabs(a.imag()) < std::fabs(b.imag())
                                              : a.imag() < b.imag();
        });
        for (std::size_t i = 0; i + 1 < nonreal.size(); i += 2)
            CHECK(nonreal[i] == std::conj(nonreal[i + 1]));

        int total = 0;
        for (int sz : s.cluster_sizes) total += sz;
        CHECK(total == s.order());
        for (int id : s.cluster_ids) {
            REQUIRE(id >= 0);
            REQUIRE(id < static_cast<int>(s.cluster_sizes.size()));
        }
    }
}

TEST_CASE("residuals certify every reported eigenvalue") {
    for (std::uint64_t t = 0; t < 10; ++t) {
        SplitMix64 rng = trial_rng(29, t);
        const DenseMatrix m = random_matrix(6, rng);
        const Spectrum s = eigenvalues(m);
        REQUIRE(s.residuals.size() == s.eigenvalues.size());
        CHECK(s.max_residual() < 1e-9 * std::max(1.0, frobenius_norm(m)));
    }
}

TEST_CASE("eigenvector_for recovers known eigenvectors") {
    SUBCASE("kernel vector of K is the all-ones direction") {
        const auto v = eigenvector_for(k_tilde(5), Complex(0, 0));
        for (int i = 1; i < 5; ++i)
            CHECK(std::abs(v[static_cast<std::size_t>(i)] - v[0]) < 1e-9);
    }
    SUBCASE("cycle Laplacian eigenvector is the vector of roots of unity") {
        const int n = 5;
        const DenseMatrix m = to_double_matrix(l_k_matrix(n, 1).exact_matrix());
        const Complex omega = std::exp(Complex(0, 2.0 * pi / n));
        const Complex mu = (1.0 - omega) / static_cast<double>(n);
        const auto v = eigenvector_for(m, mu);
        // proportional to (1, omega, omega^2, ...): ratios of consecutive
        // entries all equal omega
        for (int i = 0; i < n; ++i) {
            const Complex ratio =
                v[static_cast<std::size_t>((i + 1) % n)] / v[static_cast<std::size_t>(i)];
            CHECK(std::abs(ratio - omega) < 1e-8);
        }
    }
    SUBCASE("rotation block has eigenvalue c + is") {
        DenseMatrix m(2);
        const double c = std::cos(0.7), s = std::sin(0.7);
        m(0, 0) = c;
        m(0, 1) = -s;
        m(1, 0) = s;
        m(1, 1) = c;
        const auto v = eigenvector_for(m, Complex(c, s));
        const Complex applied0 = m(0, 0) * v[0] + m(0, 1) * v[1];
        CHECK(std::abs(applied0 - Complex(c, s) * v[0]) < 1e-10);
    }
    SUBCASE("a point far from the spectrum is rejected") {
        CHECK_THROWS_AS(eigenvector_for(k_tilde(3), Complex(0.5, 0)), NotAnEigenvalueError);
    }
}

TEST_CASE("rank of structured matrices") {
    CHECK(rank(DenseMatrix(3)) == 0);
    CHECK(rank(DenseMatrix::identity(4)) == 4);
    CHECK(rank(k_tilde(4)) == 3);
    CHECK(rank(j_bar(6)) == 1);

    // path digraph 0 -> 1 -> 2: two nonzero rows, rank 2
    const WeightedDigraph path = new_digraph(3, {{0, 1, Rat(1)}, {1, 2, Rat(1)}}, Rat(1));
    CHECK(rank(standardize(path).matrix) == 2);

    // rank is invariant under row/column permutation
    SplitMix64 rng(99);
    const DenseMatrix m = standardize(sample_digraph(5, rng, 0.5, Rat(1))).matrix;
    DenseMatrix p(5);
    const std::vector<int> perm = {3, 0, 4, 1, 2};
    for (int i = 0; i < 5; ++i) p(i, perm[static_cast<std::size_t>(i)]) = 1.0;
    CHECK(rank(p * m * p.transposed()) == rank(m));
}

TEST_CASE("characteristic polynomials of small fixed matrices") {
    SUBCASE("zero 2x2 gives lambda^2") {
        CHECK(char_poly(DenseMatrix(2)).coeffs() == std::vector<double>{0, 0, 1});
    }
    SUBCASE("circulant permutation Q of order 3 gives lambda^3 - 1") {
        CHECK(char_poly(circulant_q(3)).coeffs() == std::vector<double>{-1, 0, 0, 1});
    }
    SUBCASE("K of order 3 gives lambda (lambda - 1)^2") {
        const Polynomial<Rat> p = char_poly_exact(exact_k_tilde(3));
        CHECK(p.coeffs() == std::vector<Rat>{Rat(0), Rat(1), Rat(-2), Rat(1)});
    }
}

TEST_CASE("float and exact characteristic polynomials agree") {
    for (int n = 2; n <= 7; ++n) {
        SplitMix64 rng = trial_rng(41, static_cast<std::uint64_t>(n));
        const StandardizedLaplacian l =
            standardize(sample_digraph_quantized(n, rng, 0.7, 12));
        const Polynomial<double> pf = char_poly(l.matrix);
        const Polynomial<Rat> pe = char_poly_exact(l.exact_matrix());
        REQUIRE(pf.degree() == n);
        REQUIRE(pe.degree() == n);
        for (int i = 0; i <= n; ++i)
            CHECK(std::fabs(pf[static_cast<std::size_t>(i)] -
                            to_double(pe[static_cast<std::size_t>(i)])) < 1e-10);
    }
}

TEST_CASE("exact characteristic polynomial at zero equals the determinant") {
    for (std::uint64_t t = 0; t < 15; ++t) {
        SplitMix64 rng = trial_rng(53, t);
        const int n = 2 + static_cast<int>(t % 5);
        RationalMatrix m(n);
        for (auto& v : m.data())
            v = Rat(static_cast<int>(rng.next_below(19)) - 9,
                    1 + static_cast<int>(rng.next_below(7)));
        const Polynomial<Rat> p = char_poly_exact(m);
        // det(lambda I - M) at lambda = 0 is (-1)^n det(M)
        const Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
        CHECK(p[0] == sign * det_exact(m));
    }
}

TEST_CASE("float eigenvalues are roots of the exact characteristic polynomial") {
    for (std::uint64_t t = 0; t < 10; ++t) {
        SplitMix64 rng = trial_rng(61, t);
        const StandardizedLaplacian l =
            standardize(sample_digraph_quantized(6, rng, 0.6, 10));
        const Polynomial<Rat> pe = char_poly_exact(l.exact_matrix());
        std::vector<double> cd;
        for (const Rat& c : pe.coeffs()) cd.push_back(to_double(c));
        const Polynomial<double> p(cd);
        for (const Complex& z : eigenvalues(l.matrix).eigenvalues)
            CHECK(std::abs(p.eval(z)) < 1e-8);
    }
}

TEST_CASE("matrix power limits") {
    SUBCASE("identity is already its own limit") {
        const PowerLimit r = matrix_power_limit(DenseMatrix::identity(3), 1e-12, 1000000);
        REQUIRE(r.limit.has_value());
        CHECK(max_abs_diff(*r.limit, DenseMatrix::identity(3)) == 0.0);
    }
    SUBCASE("J is idempotent") {
        const PowerLimit r = matrix_power_limit(j_bar(4), 1e-12, 1000000);
        REQUIRE(r.limit.has_value());
        CHECK(max_abs_diff(*r.limit, j_bar(4)) < 1e-12);
    }
    SUBCASE("0.5 I converges to zero") {
        const PowerLimit r = matrix_power_limit(0.5 * DenseMatrix::identity(2), 1e-12, 1000000);
        REQUIRE(r.limit.has_value());
        CHECK(inf_norm(*r.limit) < 1e-11);
    }
    SUBCASE("minus identity diverges") {
        DenseMatrix m = DenseMatrix::identity(3);
        m *= -1.0;
        CHECK_FALSE(matrix_power_limit(m, 1e-12, 1000000).limit.has_value());
    }
    SUBCASE("irrational rotation diverges") {
        DenseMatrix m(2);
        m(0, 0) = std::cos(1.0);
        m(0, 1) = -std::sin(1.0);
        m(1, 0) = std::sin(1.0);
        m(1, 1) = std::cos(1.0);
        CHECK_FALSE(matrix_power_limit(m, 1e-12, 1000000).limit.has_value());
    }
}

TEST_CASE("index of nilpotency/semisimplicity") {
    CHECK(index_of(DenseMatrix::identity(4)) == 0);
    CHECK(index_of(DenseMatrix(3)) == 1);

    DenseMatrix nilpotent(2);
    nilpotent(0, 1) = 1.0;
    CHECK(index_of(nilpotent) == 2);

    for (std::uint64_t t = 0; t < 10; ++t) {
        SplitMix64 rng = trial_rng(71, t);
        const WeightedDigraph g = sample_digraph(5, rng, 0.5, Rat(1));
        if (g.arcs().empty()) continue;
        CHECK(index_of(standardize(g).matrix) == 1);
    }
}

TEST_CASE("spectral radius") {
    CHECK(spectral_radius(DenseMatrix(3)) == 0.0);
    CHECK(spectral_radius(0.5 * DenseMatrix::identity(4)) == doctest::Approx(0.5).epsilon(1e-12));
    for (std::uint64_t t = 0; t < 10; ++t) {
        SplitMix64 rng = trial_rng(83, t);
        const StandardizedLaplacian l = sample_standardized(6, rng);
        CHECK(spectral_radius(stochastic_companion(l)) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("trace and determinant match eigenvalue sums and products") {
    for (std::uint64_t t = 0; t < 12; ++t) {
        SplitMix64 rng = trial_rng(97, t);
        const int n = 2 + static_cast<int>(t % 6);
        const DenseMatrix m = random_matrix(n, rng);
        const Spectrum s = eigenvalues(m);
        Complex sum = 0, prod = 1;
        for (const Complex& z : s.eigenvalues) {
            sum += z;
            prod *= z;
        }
        CHECK(std::abs(sum - m.trace()) < 1e-9);
        // determinant from the exact characteristic polynomial of the
        // rationalized matrix -- independent of the QR iteration
        const Polynomial<Rat> pe = char_poly_exact(to_rational_matrix(m));
        const double det = ((n % 2 == 0) ? 1.0 : -1.0) * to_double(pe[0]);
        CHECK(std::abs(prod - det) < 1e-8 * std::max(1.0, std::abs(det)));
    }
}

TEST_CASE("exhausted sweep budget raises the convergence error") {
    SplitMix64 rng(5);
    const DenseMatrix m = random_matrix(8, rng);
    EigenOptions opts;
    opts.max_sweeps = 1;
    CHECK_THROWS_AS(eigenvalues(m, opts), NoConvergenceError);
}
