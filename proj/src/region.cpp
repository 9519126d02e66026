#include "lapspec/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lapspec/eigen.hpp"
#include "lapspec/errors.hpp"

namespace lapspec {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(ComplexPoint a, ComplexPoint b) { return a.real() * b.imag() - a.imag() * b.real(); }

/// Signed distance of z from the line through the origin with unit direction
/// d: positive on d's left.
double side_of_ray(ComplexPoint d, ComplexPoint z) { return cross(d, z); }

/// The closed sector |arg z| <= alpha (alpha < pi/2), relaxed outward.
/// Cross products against the boundary ray directions avoid arctangent
/// branch cuts; each cross product is a perpendicular distance because the
/// ray directions are unit vectors.
bool sector_at_zero_contains(double alpha, ComplexPoint z, double geo_tol) {
    const ComplexPoint upper(std::cos(alpha), std::sin(alpha));
    const ComplexPoint lower(std::cos(alpha), -std::sin(alpha));
    return side_of_ray(upper, z) <= geo_tol && side_of_ray(lower, z) >= -geo_tol;
}

} // namespace

RegionR region_r(int n) {
    if (n < 2) throw BadIndexError("region is defined for order >= 2, got " + std::to_string(n));
    RegionR r;
    r.n = n;
    r.disk_center_left = 1.0 / n;
    r.disk_center_right = 1.0 - 1.0 / n;
    r.disk_radius = 1.0 - 1.0 / n;
    r.angle_at_zero = kPi / 2.0 - kPi / n;
    r.band_height = 0.5 / n / std::tan(kPi / (2.0 * n));
    if (!(r.band_height < r.disk_radius))
        throw InvariantViolationError("band height must stay below the disk radius");
    return r;
}

bool region_r_contains(const RegionR& r, ComplexPoint z, double geo_tol) {
    const int n = r.n;
    if (std::abs(z - ComplexPoint(r.disk_center_left, 0.0)) > r.disk_radius + geo_tol) return false;
    if (std::abs(z - ComplexPoint(r.disk_center_right, 0.0)) > r.disk_radius + geo_tol) return false;
    if (!sector_at_zero_contains(r.angle_at_zero, z, geo_tol)) return false;

    // Sector at 1: the smaller wedge between the rays from 1 through
    // e^{2*pi*i/n} and its conjugate, which opens toward 0.  The chord from 1
    // to e^{i*theta} has direction angle (pi + theta)/2.
    const double chord = kPi / 2.0 + kPi / n;
    const ComplexPoint upper(std::cos(chord), std::sin(chord));
    const ComplexPoint lower(std::cos(chord), -std::sin(chord));
    const ComplexPoint w = z - ComplexPoint(1.0, 0.0);
    if (side_of_ray(upper, w) < -geo_tol || side_of_ray(lower, w) > geo_tol) return false;

    return std::fabs(z.imag()) <= r.band_height + geo_tol;
}

bool prop1_region_contains(int n, ComplexPoint z, double geo_tol) {
    if (n < 2) throw BadIndexError("region is defined for order >= 2, got " + std::to_string(n));
    const double radius = 1.0 - 1.0 / n;
    if (std::abs(z - ComplexPoint(radius, 0.0)) > radius + geo_tol) return false;
    return sector_at_zero_contains(kPi / 2.0 - kPi / n, z, geo_tol);
}

std::vector<ComplexPoint> PolygonS::upper_chain() const {
    return {vertices.begin(), vertices.begin() + n};
}

PolygonS polygon_s(int n) {
    if (n < 2) throw BadIndexError("polygon is defined for order >= 2, got " + std::to_string(n));
    PolygonS s;
    s.n = n;
    s.vertices.reserve(static_cast<std::size_t>(2 * (n - 1)));

    // Closed form for the extremal eigenvalues: the chain starts at 0, ends
    // at 1 (both exact), and stays in the upper half-plane in between.
    s.vertices.emplace_back(0.0, 0.0);
    const double sin_base = std::sin(kPi / n);
    for (int k = 1; k <= n - 2; ++k) {
        const double amp = std::sin(k * kPi / n) / (n * sin_base);
        const double phase = (k + 1) * kPi / n;
        s.vertices.emplace_back(static_cast<double>(k) / n - amp * std::cos(phase), amp * std::sin(phase));
    }
    s.vertices.emplace_back(1.0, 0.0);

    // Cross-check against the partial-sum form (1/n) sum_{j=1..k} (1 - mu^j),
    // mu = e^{-2*pi*i/n}: both come from the same derivation, so disagreement
    // means a formula transcription bug.
    ComplexPoint acc(0.0, 0.0);
    for (int k = 1; k <= n - 2; ++k) {
        const double ang = -2.0 * kPi * k / n;
        acc += ComplexPoint(1.0 - std::cos(ang), -std::sin(ang));
        const ComplexPoint by_sum = acc * (1.0 / n);
        if (std::abs(by_sum - s.vertices[static_cast<std::size_t>(k)]) > 1e-12)
            throw InvariantViolationError("polygon vertex " + std::to_string(k) +
                                          " disagrees between closed and partial-sum forms");
    }

    for (int k = n - 2; k >= 1; --k)
        s.vertices.push_back(std::conj(s.vertices[static_cast<std::size_t>(k)]));

    // Clockwise convexity: every turn along the cycle must bend the same way.
    const int m = static_cast<int>(s.vertices.size());
    if (m >= 3) {
        for (int i = 0; i < m; ++i) {
            const ComplexPoint a = s.vertices[static_cast<std::size_t>(i)];
            const ComplexPoint b = s.vertices[static_cast<std::size_t>((i + 1) % m)];
            const ComplexPoint c = s.vertices[static_cast<std::size_t>((i + 2) % m)];
            if (cross(b - a, c - b) > 1e-15)
                throw InvariantViolationError("polygon is not convex in clockwise order at vertex " +
                                              std::to_string(i));
        }
    }
    return s;
}

namespace {

/// Signed distance of z beyond the directed edge a->b of a clockwise
/// polygon: positive outside (left of the edge).
double edge_distance(ComplexPoint a, ComplexPoint b, ComplexPoint z) {
    const ComplexPoint e = b - a;
    const double len = std::abs(e);
    if (len == 0.0) return std::abs(z - a);
    return cross(e, z - a) / len;
}

} // namespace

double polygon_signed_distance(const PolygonS& s, ComplexPoint z) {
    if (s.vertices.size() == 2) {
        // Degenerate segment [0, 1].
        return std::max({std::fabs(z.imag()), -z.real(), z.real() - 1.0});
    }
    double worst = -std::numeric_limits<double>::infinity();
    const int m = static_cast<int>(s.vertices.size());
    for (int i = 0; i < m; ++i)
        worst = std::max(worst, edge_distance(s.vertices[static_cast<std::size_t>(i)],
                                              s.vertices[static_cast<std::size_t>((i + 1) % m)], z));
    return worst;
}

bool polygon_contains(const PolygonS& s, ComplexPoint z, double geo_tol) {
    return polygon_signed_distance(s, z) <= geo_tol;
}

Witness witness_matrix(int n, ComplexPoint s, double geo_tol) {
    const PolygonS poly = polygon_s(n);

    Witness w;
    w.conjugated = s.imag() < 0.0;
    const ComplexPoint target = w.conjugated ? std::conj(s) : s;

    const double outside = polygon_signed_distance(poly, target);
    if (outside > geo_tol)
        throw OutsidePolygonError("point (" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) +
                                  ") lies " + std::to_string(outside) + " outside the order-" +
                                  std::to_string(n) + " polygon");

    if (target == ComplexPoint(0.0, 0.0)) {
        // Degenerate ray: the zero matrix carries the whole combination.
        w.matrix = make_standardized(RationalMatrix(n), Provenance::ConvexCombination);
        w.residual = eigen_residual(w.matrix.matrix, s);
        return w;
    }

    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    int k = -1;

    if (n == 2 || target.imag() <= 1e-12) {
        // Real target in (0, 1]: the ray through it leaves the polygon at 1,
        // i.e. through the last segment's endpoint, so c scales L_{n-1}.
        k = n - 2;
        c = std::clamp(target.real(), 0.0, 1.0);
        b = 0.0;
        a = 1.0 - c;
    } else {
        // Fan search: find the upper-chain segment [lambda_k, lambda_{k+1}]
        // the ray from 0 through the target crosses.  Exact 2x2 solve of
        // t*d = lambda_k + u*(lambda_{k+1} - lambda_k); scanning k upward
        // resolves shared-vertex ties to the lower k.
        const ComplexPoint d = target / std::abs(target);
        const std::vector<ComplexPoint> chain = poly.upper_chain();
        for (int seg = 0; seg <= n - 2; ++seg) {
            const ComplexPoint p0 = chain[static_cast<std::size_t>(seg)];
            const ComplexPoint p1 = chain[static_cast<std::size_t>(seg) + 1];
            const ComplexPoint e = p1 - p0;
            const double det = cross(e, d);
            if (det == 0.0) continue;  // ray parallel to this segment
            const double t = cross(e, p0) / det;
            const double u = cross(d, p0) / det;
            if (t <= 1e-12 || u < -1e-9 || u > 1.0 + 1e-9) continue;

            const double uu = std::clamp(u, 0.0, 1.0);
            const ComplexPoint exit = p0 + uu * e;
            const double tau = std::min(std::abs(target) / std::abs(exit), 1.0);
            b = tau * (1.0 - uu);
            c = tau * uu;
            a = std::max(0.0, 1.0 - b - c);
            k = seg;
            break;
        }
        if (k < 0)
            throw OutsidePolygonError("no upper-chain segment intersects the ray through (" +
                                      std::to_string(target.real()) + ", " + std::to_string(target.imag()) + ")");
    }

    const double total = a + b + c;
    a /= total;
    b /= total;
    c /= total;

    // Chain vertex j >= 1 is the distinguished eigenvalue of L_j, and vertex
    // 0 belongs to the zero matrix, so segment k is witnessed by
    // a*0 + b*L_k + c*L_{k+1} -- with b folded into a when k = 0.
    const StandardizedLaplacian zero = make_standardized(RationalMatrix(n), Provenance::ConvexCombination);
    std::optional<StandardizedLaplacian> left;
    const StandardizedLaplacian right = l_k_matrix(n, k + 1);
    std::vector<double> coeffs;
    std::vector<const StandardizedLaplacian*> parts;
    if (k == 0) {
        coeffs = {a + b, c};
        parts = {&zero, &right};
    } else {
        left = l_k_matrix(n, k);
        coeffs = {a, b, c};
        parts = {&zero, &*left, &right};
    }
    w.matrix = convex_combination(coeffs, parts);
    w.a = a;
    w.b = b;
    w.c = c;
    w.k = k;
    w.residual = eigen_residual(w.matrix.matrix, s);
    return w;
}

ComplexPoint cycloid_point(double tau) {
    return {(tau - std::sin(tau)) / (2.0 * kPi), (1.0 - std::cos(tau)) / (2.0 * kPi)};
}

namespace {

double distance_to_cycloid(ComplexPoint z, double tau) { return std::abs(z - cycloid_point(tau)); }

/// Golden-section minimization of the distance to the cycloid over a
/// bracket, after a coarse scan places the bracket around the global
/// minimum.
double min_distance_to_cycloid(ComplexPoint z) {
    constexpr int kScan = 256;
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kScan; ++i) {
        const double d = distance_to_cycloid(z, 2.0 * kPi * i / kScan);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    double lo = 2.0 * kPi * std::max(best - 1, 0) / kScan;
    double hi = 2.0 * kPi * std::min(best + 1, kScan) / kScan;

    constexpr double phi = 0.6180339887498949;  // golden ratio conjugate
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = distance_to_cycloid(z, x1);
    double f2 = distance_to_cycloid(z, x2);
    while (hi - lo > 1e-10) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = distance_to_cycloid(z, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = distance_to_cycloid(z, x2);
        }
    }
    return distance_to_cycloid(z, (lo + hi) / 2.0);
}

} // namespace

double cycloid_gap(int n) {
    const PolygonS s = polygon_s(n);
    double gap = 0.0;
    for (int k = 1; k <= n - 2; ++k)
        gap = std::max(gap, min_distance_to_cycloid(s.vertices[static_cast<std::size_t>(k)]));
    return gap;
}

ZBounds z_bounds(int n) {
    if (n < 2) throw BadIndexError("bounds are defined for order >= 2, got " + std::to_string(n));
    ZBounds out;
    out.band = 0.5 / n / std::tan(kPi / (2.0 * n));
    const PolygonS s = polygon_s(n);
    for (int k = 1; k <= n - 2; ++k)
        out.vertex_max = std::max(out.vertex_max, s.vertices[static_cast<std::size_t>(k)].imag());
    if (n % 2 == 1) out.z_exact = out.band;
    return out;
}

} // namespace lapspec
