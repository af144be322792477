"""Numerical checks of weighted Riesz potential inequalities on uniform grids.

Arrays are cubic (n, n[, n]) grids centered at the origin with side length
``extent``.
"""

from rieszcheck._core import (
    RieszcheckError,
    frac_laplacian,
    lattice_zeta,
    maximal,
    morrey,
    oracle_gate,
    riesz,
    run_cli,
    validate_params,
)

__all__ = [
    "RieszcheckError",
    "frac_laplacian",
    "lattice_zeta",
    "maximal",
    "morrey",
    "oracle_gate",
    "riesz",
    "run_cli",
    "validate_params",
]
