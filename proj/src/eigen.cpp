#include "lapspec/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lapspec/errors.hpp"
#include "lapspec/rng.hpp"

namespace lapspec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

using Cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Stage 1: balancing (diagonal similarity with powers of the radix, after
// permuting rows/columns that already isolate an eigenvalue).  Classic
// EISPACK-style procedure; only eigenvalues are wanted, so the permutation
// and scale records are not kept.
// ---------------------------------------------------------------------------

void exchange_rows_cols(DenseMatrix& a, int j, int m, int k, int n) {
    if (j == m) return;
    for (int i = 0; i <= k; ++i) std::swap(a(i, j), a(i, m));
    for (int i = 0; i < n; ++i) std::swap(a(j, i), a(m, i));
}

void balance(DenseMatrix& a, int& low, int& high) {
    const int n = a.order();
    constexpr double radix = 2.0;
    constexpr double b2 = radix * radix;
    int k = n - 1;
    int l = 0;

    // Push rows whose off-diagonal part vanishes to the bottom: their diagonal
    // entry is an eigenvalue and the QR window shrinks.
    for (bool moved = true; moved;) {
        moved = false;
        for (int j = k; j >= l; --j) {
            double r = 0.0;
            for (int i = l; i <= k; ++i)
                if (i != j) r += std::fabs(a(j, i));
            if (r == 0.0) {
                exchange_rows_cols(a, j, k, k, n);
                --k;
                moved = true;
                break;
            }
        }
    }
    // Symmetrically, pull all-zero columns to the top.
    for (bool moved = true; moved;) {
        moved = false;
        for (int j = l; j <= k; ++j) {
            double c = 0.0;
            for (int i = l; i <= k; ++i)
                if (i != j) c += std::fabs(a(i, j));
            if (c == 0.0) {
                exchange_rows_cols(a, j, l, k, n);
                ++l;
                moved = true;
                break;
            }
        }
    }

    // Iterative scaling: equalize row and column 1-norms with exact powers of
    // two so no rounding is introduced.
    for (bool noconv = true; noconv;) {
        noconv = false;
        for (int i = l; i <= k; ++i) {
            double c = 0.0;
            double r = 0.0;
            for (int j = l; j <= k; ++j) {
                if (j == i) continue;
                c += std::fabs(a(j, i));
                r += std::fabs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= b2;
            }
            g = r * radix;
            while (c >= g) {
                f /= radix;
                c /= b2;
            }
            if ((c + r) / f < 0.95 * s) {
                const double ginv = 1.0 / f;
                for (int j = l; j < n; ++j) a(i, j) *= ginv;
                for (int j = 0; j <= k; ++j) a(j, i) *= f;
                noconv = true;
            }
        }
    }
    low = l;
    high = k;
}

// ---------------------------------------------------------------------------
// Stage 2: orthogonal reduction to upper Hessenberg form by Householder
// reflections acting on the active window [low, high].
// ---------------------------------------------------------------------------

void hessenberg(DenseMatrix& a, int low, int high) {
    const int n = a.order();
    std::vector<double> ort(static_cast<std::size_t>(n), 0.0);

    for (int m = low + 1; m <= high - 1; ++m) {
        double scale = 0.0;
        for (int i = m; i <= high; ++i) scale += std::fabs(a(i, m - 1));
        if (scale == 0.0) continue;

        double h = 0.0;
        for (int i = high; i >= m; --i) {
            ort[static_cast<std::size_t>(i)] = a(i, m - 1) / scale;
            h += ort[static_cast<std::size_t>(i)] * ort[static_cast<std::size_t>(i)];
        }
        double g = std::sqrt(h);
        if (ort[static_cast<std::size_t>(m)] > 0.0) g = -g;
        h -= ort[static_cast<std::size_t>(m)] * g;
        ort[static_cast<std::size_t>(m)] -= g;

        // Apply P = I - (u u^T)/h from the left, then from the right.
        for (int j = m; j < n; ++j) {
            double f = 0.0;
            for (int i = high; i >= m; --i) f += ort[static_cast<std::size_t>(i)] * a(i, j);
            f /= h;
            for (int i = m; i <= high; ++i) a(i, j) -= f * ort[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i <= high; ++i) {
            double f = 0.0;
            for (int j = high; j >= m; --j) f += ort[static_cast<std::size_t>(j)] * a(i, j);
            f /= h;
            for (int j = m; j <= high; ++j) a(i, j) -= f * ort[static_cast<std::size_t>(j)];
        }
        a(m, m - 1) = scale * g;
        // The entries below the new subdiagonal are transform bookkeeping, not
        // matrix data; zero them so the QR stage sees a clean Hessenberg form.
        for (int i = m + 1; i <= high; ++i) a(i, m - 1) = 0.0;
    }
}

// ---------------------------------------------------------------------------
// Stage 3: Francis implicit double-shift QR on the Hessenberg window.
// Eigenvalues only.  Complex pairs come from 2x2 blocks as exact conjugates.
// ---------------------------------------------------------------------------

std::vector<Cplx> hqr(DenseMatrix& h, int low, int high, int max_sweeps) {
    const int n = h.order();
    std::vector<Cplx> roots;
    roots.reserve(static_cast<std::size_t>(n));

    for (int i = 0; i < n; ++i)
        if (i < low || i > high) roots.emplace_back(h(i, i), 0.0);

    double norm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) norm += std::fabs(h(i, j));

    int en = high;
    double t = 0.0;
    int sweeps = 0;

    while (en >= low) {
        int its = 0;
        for (;;) {
            // Look for a negligible subdiagonal element to deflate at.
            int l = en;
            for (; l > low; --l) {
                double s = std::fabs(h(l - 1, l - 1)) + std::fabs(h(l, l));
                if (s == 0.0) s = norm;
                if (std::fabs(h(l, l - 1)) <= kEps * s) {
                    h(l, l - 1) = 0.0;
                    break;
                }
            }

            double x = h(en, en);
            if (l == en) {
                roots.emplace_back(x + t, 0.0);
                --en;
                break;
            }

            double y = h(en - 1, en - 1);
            double w = h(en, en - 1) * h(en - 1, en);
            if (l == en - 1) {
                double p = (y - x) / 2.0;
                const double q = p * p + w;
                double zz = std::sqrt(std::fabs(q));
                x += t;
                if (q >= 0.0) {
                    zz = p + (p >= 0.0 ? zz : -zz);
                    roots.emplace_back(x + zz, 0.0);
                    roots.emplace_back(zz != 0.0 ? x - w / zz : x + zz, 0.0);
                } else {
                    roots.emplace_back(x + p, zz);
                    roots.emplace_back(x + p, -zz);
                }
                en -= 2;
                break;
            }

            if (sweeps >= max_sweeps)
                throw NoConvergenceError("QR iteration exhausted " + std::to_string(max_sweeps) +
                                         " sweeps with " + std::to_string(en - low + 1) +
                                         " eigenvalues unresolved");

            if (its > 0 && its % 10 == 0) {
                // Exceptional shift: the standard Wilkinson strategy stalls on
                // some structured matrices; perturb with an ad-hoc shift.
                t += x;
                for (int i = low; i <= en; ++i) h(i, i) -= x;
                const double s = std::fabs(h(en, en - 1)) + std::fabs(h(en - 1, en - 2));
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            ++its;
            ++sweeps;

            // Find two consecutive small subdiagonals so the implicit bulge can
            // start below them.
            int m = en - 2;
            double p = 0.0;
            double q = 0.0;
            double r = 0.0;
            for (; m >= l; --m) {
                const double zz = h(m, m);
                const double rr = x - zz;
                const double ss = y - zz;
                p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
                q = h(m + 1, m + 1) - zz - rr - ss;
                r = h(m + 2, m + 1);
                const double s = std::fabs(p) + std::fabs(q) + std::fabs(r);
                p /= s;
                q /= s;
                r /= s;
                if (m == l) break;
                const double tst1 =
                    std::fabs(p) * (std::fabs(h(m - 1, m - 1)) + std::fabs(zz) + std::fabs(h(m + 1, m + 1)));
                const double tst2 = std::fabs(h(m, m - 1)) * (std::fabs(q) + std::fabs(r));
                if (tst2 <= kEps * tst1) break;
            }
            for (int i = m + 2; i <= en; ++i) {
                h(i, i - 2) = 0.0;
                if (i > m + 2) h(i, i - 3) = 0.0;
            }

            // Chase the bulge with 3x3 (and final 2x2) Householder reflections.
            for (int k = m; k <= en - 1; ++k) {
                const bool notlast = (k != en - 1);
                if (k != m) {
                    p = h(k, k - 1);
                    q = h(k + 1, k - 1);
                    r = notlast ? h(k + 2, k - 1) : 0.0;
                    x = std::fabs(p) + std::fabs(q) + std::fabs(r);
                    if (x == 0.0) continue;
                    p /= x;
                    q /= x;
                    r /= x;
                }
                double s = std::sqrt(p * p + q * q + r * r);
                if (p < 0.0) s = -s;
                if (k != m) {
                    h(k, k - 1) = -s * x;
                } else if (l != m) {
                    h(k, k - 1) = -h(k, k - 1);
                }
                p += s;
                x = p / s;
                y = q / s;
                const double zz = r / s;
                q /= p;
                r /= p;

                if (!notlast) {
                    for (int j = k; j <= en; ++j) {
                        const double f = h(k, j) + q * h(k + 1, j);
                        h(k, j) -= f * x;
                        h(k + 1, j) -= f * y;
                    }
                    const int jend = std::min(en, k + 3);
                    for (int i = l; i <= jend; ++i) {
                        const double f = x * h(i, k) + y * h(i, k + 1);
                        h(i, k) -= f;
                        h(i, k + 1) -= f * q;
                    }
                } else {
                    for (int j = k; j <= en; ++j) {
                        const double f = h(k, j) + q * h(k + 1, j) + r * h(k + 2, j);
                        h(k, j) -= f * x;
                        h(k + 1, j) -= f * y;
                        h(k + 2, j) -= f * zz;
                    }
                    const int jend = std::min(en, k + 3);
                    for (int i = l; i <= jend; ++i) {
                        const double f = x * h(i, k) + y * h(i, k + 1) + zz * h(i, k + 2);
                        h(i, k) -= f;
                        h(i, k + 1) -= f * q;
                        h(i, k + 2) -= f * r;
                    }
                }
            }
        }
    }
    return roots;
}

std::vector<Cplx> eigenvalues_raw(DenseMatrix work, int max_sweeps) {
    const int n = work.order();
    if (n == 0) return {};
    int low = 0;
    int high = n - 1;
    balance(work, low, high);
    hessenberg(work, low, high);
    auto roots = hqr(work, low, high, max_sweeps <= 0 ? 100 * std::max(n, 1) : max_sweeps);
    std::sort(roots.begin(), roots.end(), [](const Cplx& a, const Cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

// ---------------------------------------------------------------------------
// Inverse iteration with a complex shift.  The LU factors of M - lambda I are
// computed with partial pivoting; exactly singular pivots are floored at
// eps * ||M|| so the solve stays usable when lambda sits on the spectrum.
// ---------------------------------------------------------------------------

struct ComplexLu {
    ComplexMatrix lu{1};
    std::vector<int> perm;
};

ComplexLu factor_shifted(const DenseMatrix& m, Cplx lambda) {
    const int n = m.order();
    ComplexLu f{ComplexMatrix(n), std::vector<int>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f.lu(i, j) = Cplx(m(i, j)) - (i == j ? lambda : Cplx(0.0));

    double scale = inf_norm(m) + std::abs(lambda);
    if (scale == 0.0) scale = 1.0;
    const double pivot_floor = kEps * scale;

    std::iota(f.perm.begin(), f.perm.end(), 0);
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(f.lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double cand = std::abs(f.lu(i, k));
            if (cand > best) {
                best = cand;
                p = i;
            }
        }
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(p, j));
            std::swap(f.perm[static_cast<std::size_t>(k)], f.perm[static_cast<std::size_t>(p)]);
        }
        if (std::abs(f.lu(k, k)) < pivot_floor) f.lu(k, k) = Cplx(pivot_floor, 0.0);
        const Cplx inv = 1.0 / f.lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            const Cplx mult = f.lu(i, k) * inv;
            f.lu(i, k) = mult;
            if (mult != Cplx(0.0))
                for (int j = k + 1; j < n; ++j) f.lu(i, j) -= mult * f.lu(k, j);
        }
    }
    return f;
}

std::vector<Cplx> lu_solve(const ComplexLu& f, const std::vector<Cplx>& rhs) {
    const int n = f.lu.order();
    std::vector<Cplx> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = rhs[static_cast<std::size_t>(f.perm[static_cast<std::size_t>(i)])];
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) x[static_cast<std::size_t>(i)] -= f.lu(i, j) * x[static_cast<std::size_t>(j)];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[static_cast<std::size_t>(i)] -= f.lu(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] /= f.lu(i, i);
    }
    return x;
}

double vec_norm(const std::vector<Cplx>& v) {
    double s = 0.0;
    for (const Cplx& c : v) s += std::norm(c);
    return std::sqrt(s);
}

double residual_norm(const DenseMatrix& m, Cplx lambda, const std::vector<Cplx>& v) {
    const int n = m.order();
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        Cplx acc = -lambda * v[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) acc += m(i, j) * v[static_cast<std::size_t>(j)];
        s += std::norm(acc);
    }
    return std::sqrt(s);
}

struct InverseIterationResult {
    std::vector<Cplx> vector;
    double residual = std::numeric_limits<double>::infinity();
};

InverseIterationResult inverse_iteration(const DenseMatrix& m, Cplx lambda, double stop_residual) {
    const int n = m.order();
    InverseIterationResult best;
    if (n == 0) return best;

    const ComplexLu f = factor_shifted(m, lambda);

    // Deterministic pseudo-random start vector: no component of the sought
    // eigenvector is systematically missed, and reruns are reproducible.
    std::vector<Cplx> v(static_cast<std::size_t>(n));
    SplitMix64 rng(0x6c61707370656303ULL);
    for (auto& c : v) c = Cplx(0.5 + rng.next_double(), 0.0);
    double nv = vec_norm(v);
    for (auto& c : v) c /= nv;

    constexpr int kMaxIterations = 8;
    for (int it = 0; it < kMaxIterations; ++it) {
        std::vector<Cplx> w = lu_solve(f, v);
        const double nw = vec_norm(w);
        if (!(nw > 0.0) || !std::isfinite(nw)) break;
        for (auto& c : w) c /= nw;
        const double res = residual_norm(m, lambda, w);
        if (res < best.residual) {
            best.vector = w;
            best.residual = res;
        }
        v = std::move(w);
        if (best.residual <= stop_residual) break;
    }
    return best;
}

} // namespace

int Spectrum::multiplicity_near(Cplx center, double radius) const {
    int count = 0;
    for (const Cplx& z : eigenvalues)
        if (std::abs(z - center) <= radius) ++count;
    return count;
}

double Spectrum::max_residual() const {
    double worst = 0.0;
    for (double r : residuals) worst = std::max(worst, r);
    return worst;
}

Spectrum eigenvalues(const DenseMatrix& m, const EigenOptions& opts) {
    const int n = m.order();
    Spectrum spec;
    spec.eigenvalues = eigenvalues_raw(m, opts.max_sweeps);

    spec.residuals.assign(static_cast<std::size_t>(n), 0.0);
    if (opts.residuals && n > 0) {
        const double stop = opts.tol * std::max(1.0, frobenius_norm(m));
        for (int i = 0; i < n; ++i) {
            const Cplx z = spec.eigenvalues[static_cast<std::size_t>(i)];
            // A conjugate partner already measured gives the same residual:
            // conjugating an eigenpair of a real matrix conjugates the defect.
            bool reused = false;
            if (z.imag() != 0.0) {
                for (int j = 0; j < i; ++j) {
                    if (spec.eigenvalues[static_cast<std::size_t>(j)] == std::conj(z)) {
                        spec.residuals[static_cast<std::size_t>(i)] = spec.residuals[static_cast<std::size_t>(j)];
                        reused = true;
                        break;
                    }
                }
            }
            if (!reused)
                spec.residuals[static_cast<std::size_t>(i)] = inverse_iteration(m, z, stop).residual;
        }
    }

    // Union-find clustering of numerically coincident eigenvalues.
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(spec.eigenvalues[static_cast<std::size_t>(i)] - spec.eigenvalues[static_cast<std::size_t>(j)]) <=
                opts.cluster_tol)
                parent[static_cast<std::size_t>(find(i))] = find(j);

    spec.cluster_ids.assign(static_cast<std::size_t>(n), -1);
    int next_id = 0;
    std::vector<int> id_of_root(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int root = find(i);
        if (id_of_root[static_cast<std::size_t>(root)] < 0) {
            id_of_root[static_cast<std::size_t>(root)] = next_id++;
            spec.cluster_sizes.push_back(0);
        }
        spec.cluster_ids[static_cast<std::size_t>(i)] = id_of_root[static_cast<std::size_t>(root)];
        ++spec.cluster_sizes[static_cast<std::size_t>(spec.cluster_ids[static_cast<std::size_t>(i)])];
    }
    return spec;
}

double eigen_residual(const DenseMatrix& m, Cplx lambda) {
    return inverse_iteration(m, lambda, 0.0).residual;
}

std::vector<Cplx> eigenvector_for(const DenseMatrix& m, Cplx lambda, double tol) {
    const double stop = tol * std::max(1.0, frobenius_norm(m));
    InverseIterationResult r = inverse_iteration(m, lambda, stop);
    if (!(r.residual <= stop))
        throw NotAnEigenvalueError("inverse iteration residual " + std::to_string(r.residual) +
                                   " exceeds bound " + std::to_string(stop) +
                                   "; the shift is not within tolerance of the spectrum");
    return r.vector;
}

namespace {

template <typename S>
double abs_sq(const S& x) {
    if constexpr (std::is_same_v<S, double>)
        return x * x;
    else
        return std::norm(x);
}

template <typename S>
S conj_of(const S& x) {
    if constexpr (std::is_same_v<S, double>)
        return x;
    else
        return std::conj(x);
}

template <typename S>
struct PivotedQr {
    SquareMatrix<S> r;      // upper triangle holds R; lower part holds reflector data
    std::vector<int> perm;  // column permutation
    int rank = 0;
    std::vector<std::vector<S>> reflectors;
};

// Householder QR with column pivoting.  Column norms are recomputed from
// scratch at every step -- O(n^3) overall, but immune to downdating drift,
// which matters because rank decisions feed exact multiplicity checks.
template <typename S>
PivotedQr<S> pivoted_qr(SquareMatrix<S> a, double rank_tol) {
    const int n = a.order();
    PivotedQr<S> out{std::move(a), std::vector<int>(static_cast<std::size_t>(n)), 0, {}};
    std::iota(out.perm.begin(), out.perm.end(), 0);
    double r00 = 0.0;

    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = -1.0;
        for (int j = k; j < n; ++j) {
            double s = 0.0;
            for (int i = k; i < n; ++i) s += abs_sq(out.r(i, j));
            if (s > best) {
                best = s;
                pivot = j;
            }
        }
        if (pivot != k) {
            for (int i = 0; i < n; ++i) std::swap(out.r(i, k), out.r(i, pivot));
            std::swap(out.perm[static_cast<std::size_t>(k)], out.perm[static_cast<std::size_t>(pivot)]);
        }
        const double colnorm = std::sqrt(std::max(best, 0.0));
        if (k == 0) r00 = colnorm;
        if (colnorm == 0.0 || (k > 0 && colnorm <= rank_tol * r00)) break;
        ++out.rank;

        // Reflector u = x - alpha e1 with alpha = -(x0/|x0|) ||x||; then
        // P = I - 2 u u^H / ||u||^2 maps the pivot column onto alpha e1.
        std::vector<S> u(static_cast<std::size_t>(n - k));
        for (int i = k; i < n; ++i) u[static_cast<std::size_t>(i - k)] = out.r(i, k);
        S alpha;
        const S x0 = u[0];
        const double ax0 = std::sqrt(abs_sq(x0));
        if (ax0 == 0.0)
            alpha = S(-colnorm);
        else
            alpha = x0 * S(-colnorm / ax0);
        u[0] -= alpha;
        double usq = 0.0;
        for (const S& ui : u) usq += abs_sq(ui);
        if (usq > 0.0) {
            const double two_over = 2.0 / usq;
            for (int j = k; j < n; ++j) {
                S dot{};
                for (int i = k; i < n; ++i) dot += conj_of(u[static_cast<std::size_t>(i - k)]) * out.r(i, j);
                dot *= S(two_over);
                for (int i = k; i < n; ++i) out.r(i, j) -= dot * u[static_cast<std::size_t>(i - k)];
            }
        }
        out.r(k, k) = alpha;
        for (int i = k + 1; i < n; ++i) out.r(i, k) = S{};
        out.reflectors.push_back(std::move(u));
    }
    return out;
}

} // namespace

int rank(const DenseMatrix& m, double rank_tol) { return pivoted_qr(m, rank_tol).rank; }

int rank(const ComplexMatrix& m, double rank_tol) { return pivoted_qr(m, rank_tol).rank; }

std::vector<std::vector<double>> kernel_basis(const DenseMatrix& m, double rank_tol) {
    const int n = m.order();
    PivotedQr<double> f = pivoted_qr(m, rank_tol);
    const int r = f.rank;
    std::vector<std::vector<double>> basis;

    for (int t = r; t < n; ++t) {
        // Solve R[0..r-1,0..r-1] y = -R[0..r-1, t], free variable t set to 1.
        std::vector<double> y(static_cast<std::size_t>(r), 0.0);
        for (int i = r - 1; i >= 0; --i) {
            double acc = -f.r(i, t);
            for (int j = i + 1; j < r; ++j) acc -= f.r(i, j) * y[static_cast<std::size_t>(j)];
            y[static_cast<std::size_t>(i)] = acc / f.r(i, i);
        }
        std::vector<double> x(static_cast<std::size_t>(n), 0.0);
        for (int j = 0; j < r; ++j) x[static_cast<std::size_t>(f.perm[static_cast<std::size_t>(j)])] = y[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(f.perm[static_cast<std::size_t>(t)])] = 1.0;
        basis.push_back(std::move(x));
    }

    // Modified Gram-Schmidt for an orthonormal basis.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double dot = 0.0;
            for (int k = 0; k < n; ++k) dot += basis[j][static_cast<std::size_t>(k)] * basis[i][static_cast<std::size_t>(k)];
            for (int k = 0; k < n; ++k) basis[i][static_cast<std::size_t>(k)] -= dot * basis[j][static_cast<std::size_t>(k)];
        }
        double nv = 0.0;
        for (int k = 0; k < n; ++k) nv += basis[i][static_cast<std::size_t>(k)] * basis[i][static_cast<std::size_t>(k)];
        nv = std::sqrt(nv);
        if (nv > 0.0)
            for (int k = 0; k < n; ++k) basis[i][static_cast<std::size_t>(k)] /= nv;
    }
    return basis;
}

PowerLimit matrix_power_limit(const DenseMatrix& m, double tol, long long max_k) {
    PowerLimit out;
    DenseMatrix a = m;
    long long k = 1;
    for (;;) {
        // Compare consecutive powers, not squarings: an oscillating sequence
        // (eigenvalue -1, rotations) has M^2k == M^k long before it settles.
        const DenseMatrix next = a * m;
        const double delta = max_abs_diff(next, a);
        out.effective_power = k;
        out.final_delta = delta;
        if (std::isfinite(delta) && delta <= tol) break;
        if (k >= max_k || !std::isfinite(delta) || inf_norm(a) > 1e100) return out;
        a = a * a;
        k *= 2;
    }
    // A small successive difference can still leave M^k a multiple of tol
    // away from the limit when the slowest transient mode is close to 1;
    // keep squaring until the sequence is stationary to machine precision.
    while (k * 2 <= max_k) {
        const DenseMatrix squared = a * a;
        const double delta = max_abs_diff(squared, a);
        if (!std::isfinite(delta)) break;
        a = squared;
        k *= 2;
        out.effective_power = k;
        if (delta <= 1e-15 * std::max(1.0, inf_norm(a))) break;
    }
    out.limit = a;
    return out;
}

int index_of(const DenseMatrix& m, double rank_tol) {
    const int n = m.order();
    int prev = n;  // rank(M^0) = rank(I)
    DenseMatrix power = DenseMatrix::identity(n);
    for (int k = 1; k <= n + 1; ++k) {
        power = power * m;  // power = M^k
        const int cur = rank(power, rank_tol);
        if (cur == prev) return k - 1;
        prev = cur;
    }
    return n;  // ranks must stabilize by k = n; defensive fallback
}

double spectral_radius(const DenseMatrix& m, const EigenOptions& opts) {
    EigenOptions fast = opts;
    fast.residuals = false;
    const Spectrum s = eigenvalues(m, fast);
    double r = 0.0;
    for (const Cplx& z : s.eigenvalues) r = std::max(r, std::abs(z));
    return r;
}

} // namespace lapspec
