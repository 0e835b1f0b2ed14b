"""Inner products and norms for error measurement.

All discrete L2 products carry the quadrature weight dx^2 so that norms
approximate integrals over the domain.
"""

from typing import Union

import numpy as np

from .errors import NumericalHealthError
from .models import GraphGrayScottNorm, L2Norm, WeightedCaginalpNorm
from .spectral import State, check_same_grid

AnyNorm = Union[L2Norm, WeightedCaginalpNorm, GraphGrayScottNorm]


def _l2(a: np.ndarray, b: np.ndarray, dx: float) -> float:
    return float(np.sum(a * b)) * dx * dx


def _graph(kind: GraphGrayScottNorm, u: State, v: State) -> float:
    grid = u.grid
    lam_sq = grid.laplacian_symbol**2
    cu = u.coefficients()
    cv = v.coefficients()
    total = 0.0
    for i, d in enumerate((kind.d1, kind.d2)):
        weight = grid.hermitian_weights * (1.0 + d * d * lam_sq)
        total += float(np.sum(weight * (cu[i].real * cv[i].real + cu[i].imag * cv[i].imag)))
    # Parseval for the unnormalized forward transform
    return total * grid.dx * grid.dx / (grid.n * grid.n)


def inner(kind: AnyNorm, u: State, v: State) -> float:
    """Inner product of two states in the geometry selected by kind."""
    check_same_grid(u.grid, v.grid)
    dx = u.grid.dx

    if isinstance(kind, L2Norm):
        return _l2(u.data, v.data, dx)
    if isinstance(kind, WeightedCaginalpNorm):
        return _l2(u.first, v.first, dx) + kind.ell**2 * _l2(u.second, v.second, dx)
    if isinstance(kind, GraphGrayScottNorm):
        return _graph(kind, u, v)
    raise TypeError(f"unknown norm kind {kind!r}")


def norm(kind: AnyNorm, u: State) -> float:
    """sqrt(inner(u, u)); tiny negative roundoff is clamped to zero."""
    value = inner(kind, u, u)
    if value < 0:
        scale = _l2(np.abs(u.data), np.abs(u.data), u.grid.dx)
        if value < -1e-12 * max(1.0, scale) or not np.isfinite(value):
            raise NumericalHealthError(f"negative squared norm {value:.3e}")
        value = 0.0
    if not np.isfinite(value):
        raise NumericalHealthError("non-finite norm")
    return float(np.sqrt(value))


def error_norm(kind: AnyNorm, u: State, v: State) -> float:
    """norm(u - v)."""
    return norm(kind, u - v)
