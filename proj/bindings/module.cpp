#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <vector>

#include "lapspec/charpoly.hpp"
#include "lapspec/eigen.hpp"
#include "lapspec/errors.hpp"
#include "lapspec/explorer.hpp"
#include "lapspec/figures.hpp"
#include "lapspec/io.hpp"
#include "lapspec/region.hpp"
#include "lapspec/sampling.hpp"
#include "lapspec/theory.hpp"

namespace py = pybind11;

namespace {

lapspec::DenseMatrix to_matrix(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw lapspec::BadIndexError("matrix must have at least one row");
    lapspec::DenseMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw lapspec::BadIndexError("matrix is not square");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<double>> from_matrix(const lapspec::DenseMatrix& m) {
    std::vector<std::vector<double>> rows(m.order(), std::vector<double>(m.order()));
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) rows[i][j] = m(i, j);
    return rows;
}

py::list spectrum_to_py(const lapspec::Spectrum& s) {
    py::list out;
    for (int i = 0; i < s.order(); ++i) {
        py::dict d;
        d["re"] = s.eigenvalues[i].real();
        d["im"] = s.eigenvalues[i].imag();
        d["residual"] = s.residuals.empty() ? 0.0 : s.residuals[i];
        d["cluster_id"] = s.cluster_ids[i];
        out.append(std::move(d));
    }
    return out;
}

py::dict report_to_py(const lapspec::VerificationReport& r) {
    py::dict d;
    d["theorem"] = r.theorem;
    d["pass"] = r.pass;
    py::list checks;
    for (const lapspec::CheckResult& c : r.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["value"] = c.value;
        cd["bound"] = c.bound;
        cd["pass"] = c.pass;
        checks.append(std::move(cd));
    }
    d["checks"] = std::move(checks);
    py::dict witnesses;
    for (const auto& [name, text] : r.witnesses) witnesses[py::str(name)] = text;
    d["witnesses"] = std::move(witnesses);
    return d;
}

py::dict conjecture_to_py(const lapspec::ConjectureReport& r) {
    py::dict d;
    py::dict cfg;
    cfg["n"] = r.config.n;
    cfg["trials"] = r.config.trials;
    cfg["seed"] = r.config.seed;
    cfg["density"] = r.config.density;
    cfg["mode"] = lapspec::to_string(r.config.mode);
    d["config"] = std::move(cfg);
    d["eigenvalues_tested"] = r.eigenvalues_tested;
    d["inside"] = r.inside;
    py::list violations;
    for (const lapspec::ConjectureViolation& v : r.violations) {
        py::dict vd;
        vd["trial"] = v.trial;
        vd["eigen_index"] = v.eigen_index;
        vd["eigenvalue"] = std::complex<double>(v.eigenvalue);
        vd["distance"] = v.distance;
        vd["region_failure"] = v.region_failure;
        vd["matrix_file"] = v.matrix_file;
        violations.append(std::move(vd));
    }
    d["violations"] = std::move(violations);
    d["no_convergence_count"] = r.no_convergence_count;
    d["region_failures"] = r.region_failures;
    d["max_violation_distance"] = r.max_violation_distance;
    d["runtime_seconds"] = r.runtime_seconds;
    d["pass"] = r.pass();
    return d;
}

lapspec::FigureKind figure_kind_of(const std::string& kind) {
    if (kind == "region") return lapspec::FigureKind::Region;
    if (kind == "polygon") return lapspec::FigureKind::Polygon;
    if (kind == "overlay") return lapspec::FigureKind::Overlay;
    if (kind == "cycloid") return lapspec::FigureKind::Cycloid;
    throw lapspec::BadIndexError("unknown figure kind '" + kind +
                                 "' (expected region, polygon, overlay or cycloid)");
}

} // namespace

PYBIND11_MODULE(_lapspec, m) {
    m.doc() = "Standardized Laplacian spectra of weighted digraphs";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const lapspec::ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const lapspec::BadIndexError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const lapspec::OutsidePolygonError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const lapspec::NotConvexError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const lapspec::InvalidWeightError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const lapspec::IoError& e) {
            PyErr_SetString(PyExc_OSError, e.what());
        } catch (const lapspec::Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def(
        "spectrum",
        [](const std::vector<std::vector<double>>& rows) {
            return spectrum_to_py(lapspec::eigenvalues(to_matrix(rows)));
        },
        py::arg("matrix"),
        "Eigenvalues of a real square matrix with residuals and cluster ids.");

    m.def(
        "char_poly",
        [](const std::vector<std::vector<double>>& rows) {
            return lapspec::char_poly(to_matrix(rows)).coeffs();
        },
        py::arg("matrix"), "Characteristic polynomial coefficients, ascending degree.");

    m.def(
        "polygon_vertices",
        [](int n) { return lapspec::polygon_s(n).vertices; }, py::arg("n"),
        "Vertices of the eigenvalue polygon, clockwise from 0.");

    m.def(
        "polygon_contains",
        [](int n, std::complex<double> z, double geo_tol) {
            return lapspec::polygon_contains(lapspec::polygon_s(n), z, geo_tol);
        },
        py::arg("n"), py::arg("z"), py::arg("geo_tol") = 1e-9);

    m.def(
        "region_contains",
        [](int n, std::complex<double> z, double geo_tol) {
            return lapspec::region_r_contains(lapspec::region_r(n), z, geo_tol);
        },
        py::arg("n"), py::arg("z"), py::arg("geo_tol") = 1e-9);

    m.def("prop1_contains", &lapspec::prop1_region_contains, py::arg("n"), py::arg("z"),
          py::arg("geo_tol") = 1e-9);

    m.def(
        "witness",
        [](int n, std::complex<double> z) {
            const lapspec::Witness w = lapspec::witness_matrix(n, z);
            py::dict d;
            d["matrix"] = from_matrix(w.matrix.matrix);
            d["a"] = w.a;
            d["b"] = w.b;
            d["c"] = w.c;
            d["k"] = w.k;
            d["conjugated"] = w.conjugated;
            d["residual"] = w.residual;
            return d;
        },
        py::arg("n"), py::arg("z"),
        "Standardized Laplacian whose spectrum contains the polygon point z.");

    m.def("cycloid_point", &lapspec::cycloid_point, py::arg("tau"));
    m.def("cycloid_gap", &lapspec::cycloid_gap, py::arg("n"));

    m.def(
        "z_bounds",
        [](int n) {
            const lapspec::ZBounds b = lapspec::z_bounds(n);
            py::dict d;
            d["band"] = b.band;
            d["vertex_max"] = b.vertex_max;
            d["z_exact"] = b.z_exact ? py::cast(*b.z_exact) : py::none();
            return d;
        },
        py::arg("n"));

    m.def(
        "sample_standardized",
        [](int n, std::uint64_t seed, std::uint64_t trial, double density) {
            lapspec::SplitMix64 rng = lapspec::trial_rng(seed, trial);
            return from_matrix(lapspec::sample_standardized(n, rng, density).matrix);
        },
        py::arg("n"), py::arg("seed"), py::arg("trial") = 0, py::arg("density") = 1.0,
        "Random standardized Laplacian; (seed, trial) selects the generator stream.");

    m.def(
        "standardize_digraph_file",
        [](const std::string& path) {
            return from_matrix(lapspec::standardize(lapspec::read_digraph_tsv(path)).matrix);
        },
        py::arg("path"), "Standardized Laplacian of a digraph TSV file.");

    m.def(
        "verify_file",
        [](const std::string& path, bool exact) {
            const auto reports = lapspec::run_verify_suite(
                path, exact ? lapspec::VerifyMode::Exact : lapspec::VerifyMode::Float);
            py::list out;
            for (const auto& r : reports) out.append(report_to_py(r));
            return out;
        },
        py::arg("path"), py::arg("exact") = false,
        "Run every verifier applicable to a digraph TSV or matrix CSV file.");

    m.def(
        "verify_hamiltonian",
        [](int n) { return report_to_py(lapspec::verify_hamiltonian_extremal(n)); },
        py::arg("n"));

    m.def(
        "run_conjecture",
        [](int n, long long trials, std::uint64_t seed, double density,
           const std::string& violation_dir) {
            lapspec::TrialConfig cfg;
            cfg.n = n;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.density = density;
            cfg.violation_dir = violation_dir;
            lapspec::ConjectureReport report;
            {
                py::gil_scoped_release release;
                report = lapspec::run_conjecture(cfg);
            }
            return conjecture_to_py(report);
        },
        py::arg("n"), py::arg("trials"), py::arg("seed"), py::arg("density") = 1.0,
        py::arg("violation_dir") = ".",
        "Test sampled spectra against the polygon; returns the aggregated report.");

    m.def(
        "render_figure",
        [](const std::string& kind, int n, int samples, std::uint64_t seed) {
            return lapspec::render_figure(figure_kind_of(kind), n, samples, seed);
        },
        py::arg("kind"), py::arg("n"), py::arg("samples") = 0, py::arg("seed") = 42,
        "SVG text for kind in {region, polygon, overlay, cycloid}.");
}
