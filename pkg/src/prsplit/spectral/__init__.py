"""Periodic grids, spectral transforms and linear operator actions."""
from .grid import Field, GridSpec, State, check_same_grid, make_grid
from .operators import (
    LinearSymbol,
    apply_linear,
    cayley_amplification,
    linear_cayley,
    linear_resolvent,
    resolvent_factors,
)

__all__ = [
    "Field",
    "GridSpec",
    "State",
    "check_same_grid",
    "make_grid",
    "LinearSymbol",
    "apply_linear",
    "cayley_amplification",
    "linear_cayley",
    "linear_resolvent",
    "resolvent_factors",
]
