#include <complex>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapspec/eigen.hpp"
#include "lapspec/errors.hpp"
#include "lapspec/explorer.hpp"
#include "lapspec/figures.hpp"
#include "lapspec/io.hpp"
#include "lapspec/region.hpp"

namespace {

using lapspec::ComplexPoint;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

int cmd_spectrum(const std::string& file) {
    const lapspec::DenseMatrix m = lapspec::read_matrix_csv(file);
    const lapspec::Spectrum s = lapspec::eigenvalues(m);
    std::cout << lapspec::spectrum_to_json(s);
    return kExitPass;
}

int cmd_verify(const std::string& file, bool exact) {
    std::vector<lapspec::VerificationReport> reports;
    try {
        reports = lapspec::run_verify_suite(
            file, exact ? lapspec::VerifyMode::Exact : lapspec::VerifyMode::Float);
    } catch (const lapspec::InvariantViolationError& e) {
        std::cerr << "lapspec: invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lapspec::InvalidWeightError& e) {
        std::cerr << "lapspec: invalid input: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << lapspec::reports_to_json(reports);
    bool all = true;
    for (const auto& r : reports) {
        std::cerr << "lapspec: " << r.theorem << ": " << (r.pass ? "pass" : "FAIL") << "\n";
        all = all && r.pass;
    }
    return all ? kExitPass : kExitViolation;
}

int cmd_region(int n, const std::string& svg) {
    lapspec::emit_figure(lapspec::FigureKind::Region, n, svg);
    std::cerr << "lapspec: wrote " << svg << "\n";
    return kExitPass;
}

int cmd_polygon(int n, bool as_json, const std::string& svg, int samples, std::uint64_t seed) {
    const lapspec::PolygonS poly = lapspec::polygon_s(n);
    if (!svg.empty()) {
        const lapspec::FigureKind kind =
            samples > 0 ? lapspec::FigureKind::Overlay : lapspec::FigureKind::Polygon;
        lapspec::emit_figure(kind, n, svg, samples, seed);
        std::cerr << "lapspec: wrote " << svg << "\n";
    }
    if (as_json) {
        ordered_json j;
        j["n"] = n;
        ordered_json arr = ordered_json::array();
        for (const ComplexPoint& v : poly.vertices)
            arr.push_back({{"re", v.real()}, {"im", v.imag()}});
        j["vertices"] = std::move(arr);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const ComplexPoint& v : poly.vertices)
            std::cout << lapspec::format_double(v.real()) << "\t"
                      << lapspec::format_double(v.imag()) << "\n";
    }
    return kExitPass;
}

int cmd_conjecture(lapspec::TrialConfig cfg, const std::string& out) {
    if (!out.empty()) {
        const auto parent = std::filesystem::path(out).parent_path();
        cfg.violation_dir = parent.empty() ? std::string(".") : parent.string();
    }
    const lapspec::ConjectureReport report = lapspec::run_conjecture(cfg);
    const std::string json = lapspec::conjecture_report_to_json(report);
    if (out.empty()) {
        std::cout << json;
    } else {
        lapspec::write_text_file(out, json);
        std::cerr << "lapspec: wrote " << out << "\n";
    }
    std::cerr << "lapspec: tested " << report.eigenvalues_tested << " eigenvalues in "
              << report.runtime_seconds << " s: " << report.violations.size() << " violations, "
              << report.region_failures << " region failures, " << report.no_convergence_count
              << " non-convergent trials\n";
    if (!report.pass()) return kExitViolation;
    if (report.no_convergence_count > 0) return kExitNumerical;
    return kExitPass;
}

int cmd_witness(int n, double re, double im) {
    lapspec::Witness w;
    try {
        w = lapspec::witness_matrix(n, ComplexPoint(re, im));
    } catch (const lapspec::OutsidePolygonError& e) {
        std::cerr << "lapspec: " << e.what() << "\n";
        return kExitUsage;
    }
    ordered_json j;
    j["n"] = n;
    j["point"] = {{"re", re}, {"im", im}};
    j["k"] = w.k;
    j["conjugated"] = w.conjugated;
    j["coefficients"] = {{"a", w.a}, {"b", w.b}, {"c", w.c}};
    j["residual"] = w.residual;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < w.matrix.n; ++i) {
        ordered_json row = ordered_json::array();
        for (int jcol = 0; jcol < w.matrix.n; ++jcol) row.push_back(w.matrix.matrix(i, jcol));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
    return w.residual <= 1e-8 ? kExitPass : kExitViolation;
}

int cmd_cycloid(int n, const std::string& svg) {
    lapspec::emit_figure(lapspec::FigureKind::Cycloid, n, svg);
    std::cerr << "lapspec: wrote " << svg << "\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"standardized Laplacian spectra: construction, verification, exploration"};
    app.require_subcommand(1);

    std::string spectrum_file;
    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of a matrix, as JSON");
    spectrum->add_option("matrix", spectrum_file, "square matrix CSV file")->required();

    std::string verify_file;
    bool verify_exact = false;
    CLI::App* verify =
        app.add_subcommand("verify", "run every applicable spectral-property verifier");
    verify->add_option("input", verify_file, "digraph TSV or standardized-Laplacian CSV")
        ->required();
    verify->add_flag("--exact", verify_exact, "parse entries exactly and add the exact checks");

    int region_n = 0;
    std::string region_svg;
    CLI::App* region = app.add_subcommand("region", "draw the disk-and-sector inclusion region");
    region->add_option("--n", region_n, "matrix order")->required();
    region->add_option("--svg", region_svg, "output SVG path")->required();

    int polygon_n = 0;
    bool polygon_json = false;
    std::string polygon_svg;
    int polygon_samples = 0;
    std::uint64_t polygon_seed = 42;
    CLI::App* polygon = app.add_subcommand("polygon", "vertices of the eigenvalue polygon");
    polygon->add_option("--n", polygon_n, "matrix order")->required();
    polygon->add_flag("--json", polygon_json, "print vertices as JSON instead of TSV");
    polygon->add_option("--svg", polygon_svg, "also draw region and polygon to this SVG path");
    polygon->add_option("--samples", polygon_samples,
                        "overlay eigenvalues of this many sampled matrices (needs --svg)");
    polygon->add_option("--seed", polygon_seed, "seed for the overlay samples");

    lapspec::TrialConfig cfg;
    std::string conjecture_out;
    CLI::App* conjecture =
        app.add_subcommand("conjecture", "hunt for eigenvalues escaping the polygon");
    conjecture->add_option("--n", cfg.n, "matrix order")->required();
    conjecture->add_option("--trials", cfg.trials, "number of sampled matrices")->required();
    conjecture->add_option("--seed", cfg.seed, "base seed; trial i uses hash(seed, i)")
        ->required();
    conjecture->add_option("--density", cfg.density, "probability an off-diagonal is nonzero");
    conjecture->add_option("--out", conjecture_out, "write the JSON report here (default stdout)");

    int witness_n = 0;
    double witness_re = 0.0;
    double witness_im = 0.0;
    CLI::App* witness =
        app.add_subcommand("witness", "matrix whose spectrum contains a given polygon point");
    witness->add_option("--n", witness_n, "matrix order")->required();
    witness->add_option("--re", witness_re, "real part of the target point")->required();
    witness->add_option("--im", witness_im, "imaginary part of the target point")->required();

    int cycloid_n = 0;
    std::string cycloid_svg;
    CLI::App* cycloid =
        app.add_subcommand("cycloid", "draw the polygon against its cycloid limit");
    cycloid->add_option("--n", cycloid_n, "matrix order")->required();
    cycloid->add_option("--svg", cycloid_svg, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(spectrum)) return cmd_spectrum(spectrum_file);
        if (app.got_subcommand(verify)) return cmd_verify(verify_file, verify_exact);
        if (app.got_subcommand(region)) return cmd_region(region_n, region_svg);
        if (app.got_subcommand(polygon))
            return cmd_polygon(polygon_n, polygon_json, polygon_svg, polygon_samples,
                               polygon_seed);
        if (app.got_subcommand(conjecture)) return cmd_conjecture(cfg, conjecture_out);
        if (app.got_subcommand(witness)) return cmd_witness(witness_n, witness_re, witness_im);
        if (app.got_subcommand(cycloid)) return cmd_cycloid(cycloid_n, cycloid_svg);
    } catch (const lapspec::ParseError& e) {
        std::cerr << "lapspec: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lapspec::IoError& e) {
        std::cerr << "lapspec: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lapspec::BadIndexError& e) {
        std::cerr << "lapspec: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lapspec::NoConvergenceError& e) {
        std::cerr << "lapspec: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const lapspec::Error& e) {
        std::cerr << "lapspec: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
