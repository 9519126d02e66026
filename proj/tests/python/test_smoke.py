"""Smoke tests for the lapspec Python bindings.

Runnable under pytest or directly: ``python test_smoke.py`` executes every
``test_*`` function and exits nonzero if any fails.
"""

import math
import os
import sys
import tempfile

import lapspec

K3 = [
    [2 / 3, -1 / 3, -1 / 3],
    [-1 / 3, 2 / 3, -1 / 3],
    [-1 / 3, -1 / 3, 2 / 3],
]


def _write(path, text):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _cycle5_tsv(directory):
    path = os.path.join(directory, "cycle5.tsv")
    lines = ["# directed 5-cycle", "5\t1"]
    lines += [f"{i}\t{(i + 1) % 5}\t1" for i in range(5)]
    _write(path, "\n".join(lines) + "\n")
    return path


def test_spectrum_shape_and_values():
    eigs = lapspec.spectrum(K3)
    assert len(eigs) == 3
    assert set(eigs[0]) == {"re", "im", "residual", "cluster_id"}
    values = sorted(e["re"] for e in eigs)
    assert abs(values[0]) < 1e-12
    assert abs(values[1] - 1) < 1e-12 and abs(values[2] - 1) < 1e-12
    assert all(abs(e["im"]) < 1e-12 for e in eigs)
    assert all(e["residual"] < 1e-9 for e in eigs)
    # the double eigenvalue 1 shares a cluster distinct from the kernel's
    assert len({e["cluster_id"] for e in eigs}) == 2


def test_spectrum_rejects_non_square():
    try:
        lapspec.spectrum([[0.0, 0.0]])
    except ValueError:
        return
    raise AssertionError("non-square matrix was accepted")


def test_char_poly():
    coeffs = lapspec.char_poly([[0.0, 0.0], [0.0, 0.0]])
    assert coeffs == [0.0, 0.0, 1.0]
    coeffs = lapspec.char_poly(K3)
    # x(x-1)^2 = 0 + x - 2x^2 + x^3
    expected = [0.0, 1.0, -2.0, 1.0]
    assert all(abs(a - b) < 1e-12 for a, b in zip(coeffs, expected))


def test_polygon_vertices_and_membership():
    verts = lapspec.polygon_vertices(4)
    assert len(verts) == 6
    assert verts[0] == 0 and verts[3] == 1
    assert abs(verts[1] - (0.25 + 0.25j)) < 1e-12
    assert lapspec.polygon_contains(5, 0.5 + 0.0j)
    assert not lapspec.polygon_contains(5, 2.0 + 0.0j)
    # tolerance is outward-only
    assert lapspec.polygon_contains(4, 0.25 + 0.25j + 1e-12j)
    assert not lapspec.polygon_contains(4, 0.25 + 0.35j)


def test_region_and_prop1():
    assert lapspec.region_contains(4, 0.25 + 0.0j)
    assert not lapspec.region_contains(4, -0.05 + 0.0j)
    assert lapspec.prop1_contains(3, 1.0 + 0.0j)
    assert not lapspec.prop1_contains(3, 2.5 + 0.0j)
    # every polygon vertex lies inside the localization region
    for n in (3, 7, 12):
        for v in lapspec.polygon_vertices(n):
            assert lapspec.region_contains(n, v)


def test_witness():
    w = lapspec.witness(6, 0.5 + 0.2j)
    assert w["residual"] <= 1e-8
    matrix = w["matrix"]
    assert len(matrix) == 6 and all(len(row) == 6 for row in matrix)
    assert all(abs(sum(row)) < 1e-12 for row in matrix)
    assert abs(w["a"] + w["b"] + w["c"] - 1.0) < 1e-12
    assert not w["conjugated"]
    assert lapspec.witness(6, 0.5 - 0.2j)["conjugated"]
    try:
        lapspec.witness(4, 0.9 + 0.3j)
    except ValueError:
        return
    raise AssertionError("point outside the polygon was accepted")


def test_cycloid():
    top = lapspec.cycloid_point(math.pi)
    assert abs(top - (0.5 + 1j / math.pi)) < 1e-12
    assert lapspec.cycloid_point(0.0) == 0.0
    assert lapspec.cycloid_gap(8) < lapspec.cycloid_gap(4)


def test_z_bounds():
    odd = lapspec.z_bounds(7)
    assert odd["z_exact"] == odd["band"]
    even = lapspec.z_bounds(4)
    assert even["z_exact"] is None
    assert abs(even["vertex_max"] - 0.25) < 1e-15
    assert even["vertex_max"] < even["band"]


def test_sample_standardized():
    m = lapspec.sample_standardized(5, seed=9)
    assert len(m) == 5
    for i, row in enumerate(m):
        assert abs(sum(row)) < 1e-12
        assert -1e-12 <= row[i] <= 0.8 + 1e-12
        for j, entry in enumerate(row):
            if i != j:
                assert -0.2 - 1e-12 <= entry <= 1e-12
    assert m == lapspec.sample_standardized(5, seed=9)
    assert m != lapspec.sample_standardized(5, seed=9, trial=1)
    sparse = lapspec.sample_standardized(8, seed=9, density=0.3)
    assert len(sparse) == 8


def test_standardize_digraph_file():
    with tempfile.TemporaryDirectory(prefix="lapspec-py-") as directory:
        m = lapspec.standardize_digraph_file(_cycle5_tsv(directory))
    for i in range(5):
        assert abs(m[i][i] - 0.2) < 1e-15
        assert abs(m[i][(i + 1) % 5] + 0.2) < 1e-15
        assert abs(sum(m[i])) < 1e-15


def test_verify_file_digraph():
    with tempfile.TemporaryDirectory(prefix="lapspec-py-") as directory:
        reports = lapspec.verify_file(_cycle5_tsv(directory), exact=True)
    ids = [r["theorem"] for r in reports]
    assert ids == [
        "spectrum-correspondence",
        "charpoly-identities",
        "semiconvergence",
        "multiplicities",
        "hamiltonian-extremal",
    ]
    for report in reports:
        assert report["pass"]
        assert report["checks"]
        for check in report["checks"]:
            assert set(check) == {"name", "value", "bound", "pass"}
            assert check["pass"]
        assert isinstance(report["witnesses"], dict)


def test_verify_file_matrix():
    # dyadic entries survive the decimal round trip exactly
    k4 = [[0.75 if i == j else -0.25 for j in range(4)] for i in range(4)]
    with tempfile.TemporaryDirectory(prefix="lapspec-py-") as directory:
        path = os.path.join(directory, "k4.csv")
        _write(path, "\n".join(",".join(str(x) for x in row) for row in k4) + "\n")
        reports = lapspec.verify_file(path)
    ids = [r["theorem"] for r in reports]
    assert ids == ["spectrum-correspondence", "semiconvergence", "multiplicities"]
    assert all(r["pass"] for r in reports)


def test_verify_hamiltonian():
    report = lapspec.verify_hamiltonian(4)
    assert report["theorem"] == "hamiltonian-extremal"
    assert report["pass"]
    assert "extremal-eigenvalue" in report["witnesses"]
    try:
        lapspec.verify_hamiltonian(2)
    except ValueError:
        return
    raise AssertionError("order 2 was accepted")


def test_run_conjecture():
    with tempfile.TemporaryDirectory(prefix="lapspec-py-") as directory:
        report = lapspec.run_conjecture(4, trials=50, seed=7, violation_dir=directory)
    assert report["pass"]
    assert report["eigenvalues_tested"] == 200
    assert report["inside"] == 200
    assert report["violations"] == []
    assert report["no_convergence_count"] == 0
    assert report["max_violation_distance"] == 0.0
    assert report["runtime_seconds"] >= 0.0
    cfg = report["config"]
    assert (cfg["n"], cfg["trials"], cfg["seed"]) == (4, 50, 7)
    assert cfg["mode"] == "dense-uniform"


def test_run_conjecture_rejects_bad_config():
    try:
        lapspec.run_conjecture(1, trials=10, seed=0)
    except ValueError:
        return
    raise AssertionError("order 1 was accepted")


def test_render_figure():
    svg = lapspec.render_figure("overlay", 5, samples=10, seed=3)
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    assert svg == lapspec.render_figure("overlay", 5, samples=10, seed=3)
    try:
        lapspec.render_figure("bogus", 3)
    except ValueError:
        return
    raise AssertionError("unknown figure kind was accepted")


def main():
    tests = [
        (name, fn)
        for name, fn in sorted(globals().items())
        if name.startswith("test_") and callable(fn)
    ]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            print(f"{name}: PASS")
        except Exception as exc:  # noqa: BLE001 - report and keep going
            failed += 1
            print(f"{name}: FAIL ({exc!r})")
    print(f"{len(tests) - failed}/{len(tests)} passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
