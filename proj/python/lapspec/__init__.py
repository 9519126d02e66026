"""Standardized Laplacian spectra of weighted digraphs.

The heavy lifting lives in the compiled extension ``_lapspec``; this package
re-exports its functions. Matrices are plain lists of row lists, spectra are
lists of ``{"re", "im", "residual", "cluster_id"}`` dicts, and verification
reports mirror the JSON the ``lapspec`` command line tool prints.
"""

from ._lapspec import (
    char_poly,
    cycloid_gap,
    cycloid_point,
    polygon_contains,
    polygon_vertices,
    prop1_contains,
    region_contains,
    render_figure,
    run_conjecture,
    sample_standardized,
    spectrum,
    standardize_digraph_file,
    verify_file,
    verify_hamiltonian,
    witness,
    z_bounds,
)

__all__ = [
    "char_poly",
    "cycloid_gap",
    "cycloid_point",
    "polygon_contains",
    "polygon_vertices",
    "prop1_contains",
    "region_contains",
    "render_figure",
    "run_conjecture",
    "sample_standardized",
    "spectrum",
    "standardize_digraph_file",
    "verify_file",
    "verify_hamiltonian",
    "witness",
    "z_bounds",
]
