#include "lapspec/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <mutex>

#include <json.hpp>

#include "lapspec/eigen.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/io.hpp"
#include "lapspec/parallel.hpp"
#include "lapspec/sampling.hpp"

namespace lapspec {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_to_json(const TrialConfig& cfg) {
    ordered_json j;
    j["n"] = cfg.n;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["density"] = cfg.density;
    j["mode"] = to_string(cfg.mode);
    j["cluster_tol"] = cfg.cluster_tol;
    j["geo_tol"] = cfg.geo_tol;
    j["eig_tol"] = cfg.eig_tol;
    return j;
}

ordered_json violation_to_json(const ConjectureViolation& v) {
    ordered_json j;
    j["trial"] = v.trial;
    j["eigen_index"] = v.eigen_index;
    j["eigenvalue"] = {{"re", v.eigenvalue.real()}, {"im", v.eigenvalue.imag()}};
    j["distance"] = v.distance;
    j["region_failure"] = v.region_failure;
    j["matrix_file"] = v.matrix_file;
    return j;
}

std::string violation_basename(const TrialConfig& cfg, long long trial, int eigen_index) {
    return "violation-n" + std::to_string(cfg.n) + "-seed" + std::to_string(cfg.seed) + "-trial" +
           std::to_string(trial) + "-eig" + std::to_string(eigen_index);
}

/// Write the counterexample matrix and a reproduction stub immediately, so
/// the evidence exists on disk even if the rest of the run dies.
std::string persist_violation(const TrialConfig& cfg, const ConjectureViolation& v,
                              const DenseMatrix& m) {
    namespace fs = std::filesystem;
    const fs::path dir = cfg.violation_dir.empty() ? fs::path(".") : fs::path(cfg.violation_dir);
    fs::create_directories(dir);
    const std::string base = violation_basename(cfg, v.trial, v.eigen_index);
    const fs::path csv = dir / (base + ".csv");
    write_matrix_csv(m, csv.string());

    ordered_json stub = violation_to_json(v);
    stub["matrix_file"] = csv.string();
    stub["config"] = config_to_json(cfg);
    write_text_file((dir / (base + ".json")).string(), stub.dump(2) + "\n");
    return csv.string();
}

StandardizedLaplacian sample_for_trial(const TrialConfig& cfg, SplitMix64& rng) {
    if (cfg.mode == SampleMode::SparseDigraph)
        return standardize(sample_digraph(cfg.n, rng, cfg.density, Rat(1)));
    return sample_standardized(cfg.n, rng, cfg.density);
}

std::string detect_kind(const std::string& path) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".tsv") == 0) return "digraph";
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return "matrix";
    // Fall back on content: matrix rows are comma-separated, digraph lines are not.
    const std::string content = read_text_file(path);
    for (std::size_t start = 0; start < content.size();) {
        std::size_t end = content.find('\n', start);
        if (end == std::string::npos) end = content.size();
        const std::string line = content.substr(start, end - start);
        start = end + 1;
        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return line.find(',') == std::string::npos ? "digraph" : "matrix";
    }
    throw ParseError("cannot determine input format of empty file " + path, 0);
}

/// Digraph whose standardized Laplacian reproduces `m` entry for entry: an
/// arc per negative off-diagonal with weight -n*m(i,j) and bound 1.
WeightedDigraph support_digraph(const DenseMatrix& m) {
    const int n = m.order();
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !(m(i, j) < 0.0)) continue;
            Rat w = Rat(n) * rational_from_double(-m(i, j));
            if (w > 1) w = 1;  // validation slack can overshoot the bound by ~1e-12
            arcs.push_back(Arc{i, j, std::move(w)});
        }
    }
    return new_digraph(n, std::move(arcs), Rat(1));
}

WeightedDigraph support_digraph(const RationalMatrix& m) {
    const int n = m.order();
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !(m(i, j) < 0)) continue;
            arcs.push_back(Arc{i, j, Rat(Rat(n) * -m(i, j))});
        }
    }
    return new_digraph(n, std::move(arcs), Rat(1));
}

} // namespace

std::string to_string(SampleMode mode) {
    switch (mode) {
        case SampleMode::DenseUniform: return "dense-uniform";
        case SampleMode::SparseDigraph: return "sparse-digraph";
    }
    return "unknown";
}

ConjectureReport run_conjecture(const TrialConfig& cfg) {
    if (cfg.n < 2) throw BadIndexError("conjecture trials need n >= 2, got " + std::to_string(cfg.n));
    if (cfg.trials < 1)
        throw BadIndexError("conjecture needs at least one trial, got " + std::to_string(cfg.trials));
    if (!(cfg.density >= 0.0 && cfg.density <= 1.0))
        throw BadIndexError("density must lie in [0, 1], got " + std::to_string(cfg.density));

    const auto start = std::chrono::steady_clock::now();
    const PolygonS poly = polygon_s(cfg.n);
    const RegionR region = region_r(cfg.n);

    EigenOptions eopts;
    eopts.tol = cfg.eig_tol;
    eopts.cluster_tol = cfg.cluster_tol;
    eopts.residuals = false;

    std::atomic<long long> tested{0};
    std::atomic<long long> inside{0};
    std::atomic<long long> no_convergence{0};
    std::atomic<long long> region_failures{0};
    std::mutex violation_mutex;
    std::vector<ConjectureViolation> violations;

    parallel_for(
        cfg.trials,
        [&](std::int64_t trial) {
            SplitMix64 rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(trial));
            const StandardizedLaplacian lap = sample_for_trial(cfg, rng);
            Spectrum spectrum;
            try {
                spectrum = eigenvalues(lap.matrix, eopts);
            } catch (const NoConvergenceError&) {
                no_convergence.fetch_add(1, std::memory_order_relaxed);
                return;
            }
            long long in_count = 0;
            for (int i = 0; i < spectrum.order(); ++i) {
                const ComplexPoint z = spectrum.eigenvalues[i];
                tested.fetch_add(1, std::memory_order_relaxed);
                const bool in_polygon = polygon_contains(poly, z, cfg.geo_tol);
                const bool in_region = region_r_contains(region, z, cfg.geo_tol);
                if (!in_region) region_failures.fetch_add(1, std::memory_order_relaxed);
                if (in_polygon && in_region) {
                    ++in_count;
                    continue;
                }
                ConjectureViolation v;
                v.trial = trial;
                v.eigen_index = i;
                v.eigenvalue = z;
                v.distance = std::max(0.0, polygon_signed_distance(poly, z));
                v.region_failure = !in_region;
                v.matrix_file = persist_violation(cfg, v, lap.matrix);
                std::lock_guard<std::mutex> lock(violation_mutex);
                violations.push_back(std::move(v));
            }
            inside.fetch_add(in_count, std::memory_order_relaxed);
        },
        cfg.threads);

    std::sort(violations.begin(), violations.end(),
              [](const ConjectureViolation& a, const ConjectureViolation& b) {
                  return std::tie(a.trial, a.eigen_index) < std::tie(b.trial, b.eigen_index);
              });

    ConjectureReport report;
    report.config = cfg;
    report.eigenvalues_tested = tested.load();
    report.inside = inside.load();
    report.violations = std::move(violations);
    report.no_convergence_count = no_convergence.load();
    report.region_failures = region_failures.load();
    for (const ConjectureViolation& v : report.violations)
        report.max_violation_distance = std::max(report.max_violation_distance, v.distance);
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (report.inside + static_cast<long long>(report.violations.size()) !=
        report.eigenvalues_tested)
        throw InvariantViolationError("conjecture bookkeeping: inside + violations != tested");
    return report;
}

std::string conjecture_report_to_json(const ConjectureReport& report) {
    ordered_json j;
    j["config"] = config_to_json(report.config);
    j["eigenvalues_tested"] = report.eigenvalues_tested;
    j["inside"] = report.inside;
    ordered_json arr = ordered_json::array();
    for (const ConjectureViolation& v : report.violations) arr.push_back(violation_to_json(v));
    j["violations"] = std::move(arr);
    j["no_convergence_count"] = report.no_convergence_count;
    j["region_failures"] = report.region_failures;
    j["max_violation_distance"] = report.max_violation_distance;
    j["pass"] = report.pass();
    return j.dump(2) + "\n";
}

ComplexPoint sample_point_in_polygon(const PolygonS& poly, SplitMix64& rng) {
    const std::vector<ComplexPoint>& v = poly.vertices;
    if (v.size() == 2) {
        const double t = rng.next_double();
        return v[0] + t * (v[1] - v[0]);
    }
    // Fan triangulation from vertex 0; pick a triangle with probability
    // proportional to area, then a uniform point inside it.
    std::vector<double> cumulative(v.size() - 2, 0.0);
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const ComplexPoint a = v[i] - v[0];
        const ComplexPoint b = v[i + 1] - v[0];
        total += 0.5 * std::abs(a.real() * b.imag() - a.imag() * b.real());
        cumulative[i - 1] = total;
    }
    const double pick = rng.next_double() * total;
    std::size_t tri = cumulative.size() - 1;
    for (std::size_t i = 0; i < cumulative.size(); ++i) {
        if (pick <= cumulative[i]) {
            tri = i;
            break;
        }
    }
    double u = rng.next_double();
    double w = rng.next_double();
    if (u + w > 1.0) {
        u = 1.0 - u;
        w = 1.0 - w;
    }
    return v[0] + u * (v[tri + 1] - v[0]) + w * (v[tri + 2] - v[0]);
}

std::vector<VerificationReport> run_verify_suite(const std::string& path, VerifyMode mode) {
    std::vector<VerificationReport> reports;
    const std::string kind = detect_kind(path);
    const TheoryOptions opts;

    if (kind == "digraph") {
        const WeightedDigraph g = read_digraph_tsv(path);
        const StandardizedLaplacian lap = standardize(g);
        reports.push_back(verify_spectrum_correspondence(lap, opts));
        reports.push_back(verify_charpoly_identities(lap));
        reports.push_back(verify_semiconvergence(lap, opts));
        reports.push_back(verify_multiplicities(g, opts));
        if (g.order() >= 3 && is_hamiltonian_cycle(g))
            reports.push_back(verify_hamiltonian_extremal(g.order(), opts));
        return reports;
    }

    if (mode == VerifyMode::Exact) {
        const RationalMatrix m = read_matrix_csv_exact(path);
        const StandardizedLaplacian lap = make_standardized(m, Provenance::FromDigraph);
        reports.push_back(verify_spectrum_correspondence(lap, opts));
        reports.push_back(verify_charpoly_identities(lap));
        reports.push_back(verify_semiconvergence(lap, opts));
        reports.push_back(verify_multiplicities(support_digraph(m), opts));
        return reports;
    }

    const DenseMatrix m = read_matrix_csv(path);
    const StandardizedLaplacian lap = make_standardized(m, Provenance::FromDigraph);
    reports.push_back(verify_spectrum_correspondence(lap, opts));
    reports.push_back(verify_semiconvergence(lap, opts));
    reports.push_back(verify_multiplicities(support_digraph(m), opts));
    return reports;
}

} // namespace lapspec
