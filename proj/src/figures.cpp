#include "lapspec/figures.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "lapspec/eigen.hpp"
#include "lapspec/errors.hpp"
#include "lapspec/io.hpp"
#include "lapspec/region.hpp"
#include "lapspec/rng.hpp"
#include "lapspec/sampling.hpp"

namespace lapspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScale = 610.0;  // uniform world->screen scale, circles stay circles
constexpr double kCx = 400.0;     // world (0.5, 0) maps to screen (400, 250)
constexpr double kCy = 250.0;

double sx(double re) { return kCx + (re - 0.5) * kScale; }
double sy(double im) { return kCy - im * kScale; }

std::string fmt(double v) { return format_double(std::round(v * 1000.0) / 1000.0); }

std::string point_pair(ComplexPoint z) { return fmt(sx(z.real())) + "," + fmt(sy(z.imag())); }

std::string path_of(const std::vector<ComplexPoint>& pts, bool close) {
    if (pts.empty()) return "";
    std::string d = "M" + point_pair(pts[0]);
    for (std::size_t i = 1; i < pts.size(); ++i) d += " L" + point_pair(pts[i]);
    if (close) d += " Z";
    return d;
}

double cross2(ComplexPoint a, ComplexPoint b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

/// Keep the points with cross(dir, z - p0) >= 0 (left of the directed line).
std::vector<ComplexPoint> clip_half_plane(const std::vector<ComplexPoint>& pts, ComplexPoint p0,
                                          ComplexPoint dir) {
    std::vector<ComplexPoint> out;
    const std::size_t m = pts.size();
    if (m == 0) return out;
    out.reserve(m + 2);
    for (std::size_t i = 0; i < m; ++i) {
        const ComplexPoint a = pts[i];
        const ComplexPoint b = pts[(i + 1) % m];
        const double ca = cross2(dir, a - p0);
        const double cb = cross2(dir, b - p0);
        if (ca >= 0.0) out.push_back(a);
        if ((ca > 0.0 && cb < 0.0) || (ca < 0.0 && cb > 0.0)) {
            const double t = ca / (ca - cb);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

std::vector<ComplexPoint> disk_polygon(double center, double radius, int sides) {
    std::vector<ComplexPoint> pts;
    pts.reserve(sides);
    for (int k = 0; k < sides; ++k) {
        const double theta = 2.0 * kPi * k / sides;
        pts.emplace_back(center + radius * std::cos(theta), radius * std::sin(theta));
    }
    return pts;
}

/// Clip `subject` to the disk by treating its inscribed polygon (CCW) as a
/// stack of half-planes, one per edge.
std::vector<ComplexPoint> clip_to_disk(std::vector<ComplexPoint> subject, double center,
                                       double radius, int sides) {
    const std::vector<ComplexPoint> disk = disk_polygon(center, radius, sides);
    for (int k = 0; k < sides && !subject.empty(); ++k) {
        const ComplexPoint a = disk[k];
        const ComplexPoint b = disk[(k + 1) % sides];
        subject = clip_half_plane(std::move(subject), a, b - a);
    }
    return subject;
}

/// Polygonal approximation of region R (empty for the degenerate n = 2 case,
/// where R collapses to the segment [0, 1]).
std::vector<ComplexPoint> region_polygon(const RegionR& r) {
    constexpr int kSides = 512;
    std::vector<ComplexPoint> pts = disk_polygon(r.disk_center_left, r.disk_radius, kSides);
    pts = clip_to_disk(std::move(pts), r.disk_center_right, r.disk_radius, kSides);
    if (r.angle_at_zero < kPi / 2.0) {
        const ComplexPoint upper(std::cos(r.angle_at_zero), std::sin(r.angle_at_zero));
        const ComplexPoint lower = std::conj(upper);
        pts = clip_half_plane(std::move(pts), ComplexPoint(0, 0), -upper);
        pts = clip_half_plane(std::move(pts), ComplexPoint(0, 0), lower);
        const double chord = kPi / 2.0 + kPi / r.n;
        const ComplexPoint wedge_up(std::cos(chord), std::sin(chord));
        pts = clip_half_plane(std::move(pts), ComplexPoint(1, 0), wedge_up);
        pts = clip_half_plane(std::move(pts), ComplexPoint(1, 0), -std::conj(wedge_up));
    }
    pts = clip_half_plane(std::move(pts), ComplexPoint(0, r.band_height), ComplexPoint(-1, 0));
    pts = clip_half_plane(std::move(pts), ComplexPoint(0, -r.band_height), ComplexPoint(1, 0));
    if (pts.size() < 3) pts.clear();
    return pts;
}

/// Intersection of the sector at 0 with the disk around 1 - 1/n: rays from
/// the origin out to the circle, then the far circular arc back.
std::vector<ComplexPoint> prop1_polygon(int n) {
    const double c = 1.0 - 1.0 / n;
    const double alpha = kPi / 2.0 - kPi / n;
    std::vector<ComplexPoint> pts;
    if (alpha <= 0.0) {  // n = 2: the region degenerates to the segment [0, 2c]
        pts.emplace_back(0.0, 0.0);
        pts.emplace_back(2.0 * c, 0.0);
        return pts;
    }
    const ComplexPoint exit_upper = 2.0 * c * std::cos(alpha) *
                                    ComplexPoint(std::cos(alpha), std::sin(alpha));
    const double theta_upper = std::atan2(exit_upper.imag(), exit_upper.real() - c);
    pts.emplace_back(0.0, 0.0);
    constexpr int kArcSteps = 256;
    for (int k = 0; k <= kArcSteps; ++k) {
        const double theta = theta_upper - 2.0 * theta_upper * k / kArcSteps;
        pts.emplace_back(c + c * std::cos(theta), c * std::sin(theta));
    }
    return pts;
}

std::string svg_header() {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
           "viewBox=\"0 0 800 500\">\n"
           "<defs>\n"
           "<pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\">\n"
           "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#8fb4d9\" stroke-width=\"1\"/>\n"
           "</pattern>\n"
           "</defs>\n"
           "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"#ffffff\"/>\n";
}

std::string axes() {
    std::string out;
    out += "<g stroke=\"#444444\" stroke-width=\"1\">\n";
    out += "<line x1=\"" + fmt(sx(-0.15)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" +
           fmt(sx(1.15)) + "\" y2=\"" + fmt(sy(0)) + "\"/>\n";
    out += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(-0.39)) + "\" x2=\"" + fmt(sx(0)) +
           "\" y2=\"" + fmt(sy(0.39)) + "\"/>\n";
    for (double tick : {0.0, 0.5, 1.0}) {
        out += "<line x1=\"" + fmt(sx(tick)) + "\" y1=\"" + fmt(sy(0) - 4) + "\" x2=\"" +
               fmt(sx(tick)) + "\" y2=\"" + fmt(sy(0) + 4) + "\"/>\n";
    }
    for (double tick : {-0.3, -0.2, -0.1, 0.1, 0.2, 0.3}) {
        out += "<line x1=\"" + fmt(sx(0) - 4) + "\" y1=\"" + fmt(sy(tick)) + "\" x2=\"" +
               fmt(sx(0) + 4) + "\" y2=\"" + fmt(sy(tick)) + "\"/>\n";
    }
    out += "</g>\n";
    out += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#444444\">\n";
    out += "<text x=\"" + fmt(sx(0) - 4) + "\" y=\"" + fmt(sy(0) + 18) + "\">0</text>\n";
    out += "<text x=\"" + fmt(sx(0.5) - 8) + "\" y=\"" + fmt(sy(0) + 18) + "\">0.5</text>\n";
    out += "<text x=\"" + fmt(sx(1.0) - 3) + "\" y=\"" + fmt(sy(0) + 18) + "\">1</text>\n";
    out += "</g>\n";
    return out;
}

std::string title_line(const std::string& text) {
    return "<text x=\"20\" y=\"28\" font-family=\"sans-serif\" font-size=\"15\" "
           "fill=\"#222222\">" +
           text + "</text>\n";
}

std::string filled_region(const std::vector<ComplexPoint>& pts) {
    if (pts.size() < 3) return "";
    return "<path d=\"" + path_of(pts, true) +
           "\" fill=\"url(#hatch)\" stroke=\"#41719c\" stroke-width=\"1.5\"/>\n";
}

std::string polygon_outline(const PolygonS& poly) {
    if (poly.vertices.size() == 2) {
        return "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" + fmt(sx(1)) +
               "\" y2=\"" + fmt(sy(0)) + "\" stroke=\"#b0413e\" stroke-width=\"2\"/>\n";
    }
    return "<path d=\"" + path_of(poly.vertices, true) +
           "\" fill=\"none\" stroke=\"#b0413e\" stroke-width=\"2\"/>\n";
}

std::string eigenvalue_dots(int n, int samples, std::uint64_t seed) {
    std::string out = "<g fill=\"#2b6cb0\" fill-opacity=\"0.65\">\n";
    EigenOptions opts;
    opts.residuals = false;
    for (int t = 0; t < samples; ++t) {
        SplitMix64 rng = trial_rng(seed, static_cast<std::uint64_t>(t));
        const StandardizedLaplacian lap = sample_standardized(n, rng, 1.0);
        Spectrum spectrum;
        try {
            spectrum = eigenvalues(lap.matrix, opts);
        } catch (const NoConvergenceError&) {
            continue;
        }
        for (const auto& z : spectrum.eigenvalues) {
            out += "<circle cx=\"" + fmt(sx(z.real())) + "\" cy=\"" + fmt(sy(z.imag())) +
                   "\" r=\"2\"/>\n";
        }
    }
    out += "</g>\n";
    return out;
}

std::string cycloid_curves() {
    constexpr int kSteps = 512;
    std::vector<ComplexPoint> upper;
    upper.reserve(kSteps + 1);
    for (int k = 0; k <= kSteps; ++k) {
        upper.push_back(cycloid_point(2.0 * kPi * k / kSteps));
    }
    std::vector<ComplexPoint> lower;
    lower.reserve(upper.size());
    for (const ComplexPoint& z : upper) lower.push_back(std::conj(z));
    std::string out;
    out += "<path d=\"" + path_of(upper, false) +
           "\" fill=\"none\" stroke=\"#5a5a5a\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    out += "<path d=\"" + path_of(lower, false) +
           "\" fill=\"none\" stroke=\"#5a5a5a\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    return out;
}

} // namespace

std::string render_figure(FigureKind kind, int n, int samples, std::uint64_t seed) {
    if (n < 2) throw BadIndexError("figures need n >= 2, got " + std::to_string(n));
    std::string out = svg_header();
    out += axes();
    switch (kind) {
        case FigureKind::Region: {
            const double c = 1.0 - 1.0 / n;
            // Construction lines: the full circle and the sector rays.
            out += "<circle cx=\"" + fmt(sx(c)) + "\" cy=\"" + fmt(sy(0)) + "\" r=\"" +
                   fmt(c * kScale) +
                   "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" "
                   "stroke-dasharray=\"4 4\"/>\n";
            const double alpha = kPi / 2.0 - kPi / n;
            for (double sign : {1.0, -1.0}) {
                const ComplexPoint tip = 1.3 * ComplexPoint(std::cos(alpha * sign),
                                                            std::sin(alpha * sign));
                out += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" +
                       fmt(sx(tip.real())) + "\" y2=\"" + fmt(sy(tip.imag())) +
                       "\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"4 4\"/>\n";
            }
            const std::vector<ComplexPoint> body = prop1_polygon(n);
            if (body.size() >= 3) {
                out += filled_region(body);
            } else if (body.size() == 2) {
                out += "<line x1=\"" + fmt(sx(body[0].real())) + "\" y1=\"" + fmt(sy(0)) +
                       "\" x2=\"" + fmt(sx(body[1].real())) + "\" y2=\"" + fmt(sy(0)) +
                       "\" stroke=\"#41719c\" stroke-width=\"2\"/>\n";
            }
            out += title_line("disk-and-sector inclusion region, n = " + std::to_string(n));
            break;
        }
        case FigureKind::Polygon:
        case FigureKind::Overlay: {
            const RegionR r = region_r(n);
            const std::vector<ComplexPoint> body = region_polygon(r);
            if (!body.empty()) {
                out += filled_region(body);
            } else {
                out += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" +
                       fmt(sx(1)) + "\" y2=\"" + fmt(sy(0)) +
                       "\" stroke=\"#41719c\" stroke-width=\"3\" stroke-opacity=\"0.5\"/>\n";
            }
            if (kind == FigureKind::Overlay && samples > 0)
                out += eigenvalue_dots(n, samples, seed);
            out += polygon_outline(polygon_s(n));
            const std::string what = kind == FigureKind::Overlay
                                         ? "spectral region and polygon with sampled eigenvalues"
                                         : "spectral region and polygon";
            out += title_line(what + ", n = " + std::to_string(n));
            break;
        }
        case FigureKind::Cycloid: {
            out += cycloid_curves();
            out += polygon_outline(polygon_s(n));
            out += title_line("eigenvalue polygon against the cycloid limit, n = " +
                              std::to_string(n));
            break;
        }
    }
    out += "</svg>\n";
    return out;
}

void emit_figure(FigureKind kind, int n, const std::string& path, int samples,
                 std::uint64_t seed) {
    write_text_file(path, render_figure(kind, n, samples, seed));
}

} // namespace lapspec
