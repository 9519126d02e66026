#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lapspec/laplacian.hpp"
#include "lapspec/region.hpp"
#include "lapspec/rng.hpp"
#include "lapspec/theory.hpp"

namespace lapspec {

enum class SampleMode { DenseUniform, SparseDigraph };
std::string to_string(SampleMode mode);

/// Configuration of one conjecture hunt. `threads` and `violation_dir` steer
/// execution only; everything that can influence the numbers in the report is
/// part of the config echo.
struct TrialConfig {
    int n = 8;
    long long trials = 1;
    std::uint64_t seed = 0;
    double density = 1.0;
    SampleMode mode = SampleMode::DenseUniform;
    double cluster_tol = 1e-6;
    double geo_tol = 1e-9;
    double eig_tol = 1e-10;
    int threads = 0;                 // 0 = every allowed core (see LAPSPEC_THREADS)
    std::string violation_dir = "."; // where counterexample files are written
};

/// One eigenvalue that escaped the polygon. The offending matrix is written
/// to `matrix_file` (CSV) next to a JSON stub the moment the violation is
/// found, before the run continues, so a genuine counterexample survives a
/// crash of the remaining trials.
struct ConjectureViolation {
    long long trial = 0;
    int eigen_index = 0;
    ComplexPoint eigenvalue;
    double distance = 0.0;        // outward distance from the polygon
    bool region_failure = false;  // the proved region was violated as well
    std::string matrix_file;
};

struct ConjectureReport {
    TrialConfig config;
    long long eigenvalues_tested = 0;
    long long inside = 0;
    std::vector<ConjectureViolation> violations;  // sorted by (trial, eigen_index)
    long long no_convergence_count = 0;
    long long region_failures = 0;
    double max_violation_distance = 0.0;
    /// Wall-clock seconds; reported on stderr by the CLI and deliberately not
    /// serialized, so reports are byte-identical across thread counts.
    double runtime_seconds = 0.0;

    bool pass() const { return violations.empty() && region_failures == 0; }
};

/// Sample `cfg.trials` standardized Laplacians, eigen-decompose each one and
/// test every eigenvalue for membership in polygon S (with the proved region
/// as a sanity layer). Aggregation is order-independent, and the per-trial
/// generator depends only on (seed, trial index), so the report is identical
/// for any thread count.
ConjectureReport run_conjecture(const TrialConfig& cfg);

/// Deterministic JSON form of the report (excludes runtime; see above).
std::string conjecture_report_to_json(const ConjectureReport& report);

/// Uniform point of polygon S (area measure; the order-2 segment uses length).
ComplexPoint sample_point_in_polygon(const PolygonS& poly, SplitMix64& rng);

enum class VerifyMode { Float, Exact };

/// Run every verifier applicable to the input: a digraph TSV gets the full
/// battery (plus the Hamiltonian extremal check when the digraph is a
/// directed cycle); a matrix CSV gets the spectrum, convergence and
/// multiplicity checks, plus the exact polynomial identities in Exact mode.
std::vector<VerificationReport> run_verify_suite(const std::string& path,
                                                 VerifyMode mode = VerifyMode::Float);

} // namespace lapspec
