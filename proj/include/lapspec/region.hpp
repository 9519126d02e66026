#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "lapspec/laplacian.hpp"

namespace lapspec {

using ComplexPoint = std::complex<double>;

/// Eigenvalue inclusion region for order-n standardized Laplacians: the
/// intersection of two disks, two angular sectors, and a horizontal band.
struct RegionR {
    int n = 2;
    double disk_center_left = 0.5;    // 1/n
    double disk_center_right = 0.5;   // 1 - 1/n
    double disk_radius = 0.5;         // 1 - 1/n
    double angle_at_zero = 0.0;       // half-width pi/2 - pi/n
    double band_height = 0.25;        // (1/2n) cot(pi/2n)
};

RegionR region_r(int n);

/// Containment with each constraint relaxed outward by geo_tol (never
/// inward: eigenvalues of cycle digraphs sit exactly on the boundary).
bool region_r_contains(const RegionR& r, ComplexPoint z, double geo_tol = 1e-9);

/// The coarser inclusion region: one disk centered at 1 - 1/n plus the
/// angular sector at 0.  A superset of RegionR.
bool prop1_region_contains(int n, ComplexPoint z, double geo_tol = 1e-9);

/// Convex polygon spanned by the extremal eigenvalues lambda_0 = 0,
/// lambda_1, ..., lambda_{n-1} = 1 and the conjugates of the interior
/// vertices, listed in clockwise order.  n = 2 degenerates to the segment
/// [0, 1] with two vertices.
struct PolygonS {
    int n = 2;
    std::vector<ComplexPoint> vertices;

    /// Vertices lambda_0 .. lambda_{n-1} (the closed upper chain).
    std::vector<ComplexPoint> upper_chain() const;
};

PolygonS polygon_s(int n);

bool polygon_contains(const PolygonS& s, ComplexPoint z, double geo_tol = 1e-9);

/// Largest signed edge distance: positive outside, negative inside, ~0 on
/// the boundary.  Used for diagnostics and grid comparisons.
double polygon_signed_distance(const PolygonS& s, ComplexPoint z);

/// Convex-combination eigenvalue witness: a standardized Laplacian whose
/// spectrum contains s (or its conjugate, equivalently, since the matrix is
/// real).  Built as a*0 + b*L_k + c*L_{k+1}.
struct Witness {
    StandardizedLaplacian matrix;
    double a = 1.0;          // coefficient of the zero matrix
    double b = 0.0;          // coefficient of L_k
    double c = 0.0;          // coefficient of L_{k+1}
    int k = -1;              // -1 when s = 0 (zero matrix, no L_k needed)
    bool conjugated = false; // Im(s) < 0 was mapped to the upper half-plane
    double residual = 0.0;   // inverse-iteration residual of s in the spectrum
};

Witness witness_matrix(int n, ComplexPoint s, double geo_tol = 1e-9);

/// Point of the limiting cycloid arc, tau in [0, 2*pi].
ComplexPoint cycloid_point(double tau);

/// Largest distance from an upper-chain vertex of S(n) to the cycloid arc.
double cycloid_gap(int n);

/// Imaginary-extent bounds for order n: the band height (1/2n) cot(pi/2n),
/// the largest vertex imaginary part of S(n), and -- for odd n only, where
/// the two coincide -- the exact extremal value z(n).
struct ZBounds {
    double band = 0.0;
    double vertex_max = 0.0;
    std::optional<double> z_exact;
};

ZBounds z_bounds(int n);

} // namespace lapspec
