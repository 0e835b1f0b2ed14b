"""Linear operator A evaluated mode by mode.

Each Fourier mode k carries a real upper-triangular 2x2 matrix
G_k = [[g11, g12], [0, g22]]. Caginalp uses lambda_k * [[1, -l], [0, 1]],
Gray-Scott lambda_k * diag(d1, d2). With a = 1 - tau*g11 and b = 1 - tau*g22
the resolvent is [[1/a, tau*g12/(a*b)], [0, 1/b]] in closed form.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidArgumentError
from .grid import GridSpec, State, check_same_grid


@dataclass(frozen=True, eq=False)
class LinearSymbol:
    """Per-mode 2x2 matrices of A on a fixed grid (built once, read-only)."""

    grid: GridSpec
    g11: np.ndarray
    g12: np.ndarray
    g22: np.ndarray
    name: str = "custom"

    @classmethod
    def from_blocks(
        cls,
        grid: GridSpec,
        g11: np.ndarray,
        g12: np.ndarray,
        g21: np.ndarray,
        g22: np.ndarray,
        name: str = "custom",
    ) -> "LinearSymbol":
        """Build from four coefficient-layout arrays; g21 must vanish."""
        if np.any(np.asarray(g21) != 0):
            raise InvalidArgumentError("only upper-triangular mode matrices are supported")
        blocks = []
        for block in (g11, g12, g22):
            array = np.array(np.broadcast_to(block, grid.coeff_shape), dtype=np.float64)
            array.flags.writeable = False
            blocks.append(array)
        return cls(grid, blocks[0], blocks[1], blocks[2], name)

    @classmethod
    def zero(cls, grid: GridSpec) -> "LinearSymbol":
        return cls.from_blocks(grid, 0.0, 0.0, 0.0, 0.0, name="zero")

    @classmethod
    def caginalp(cls, grid: GridSpec, ell: float) -> "LinearSymbol":
        lam = grid.laplacian_symbol
        return cls.from_blocks(grid, lam, -ell * lam, 0.0, lam, name="caginalp")

    @classmethod
    def diagonal(cls, grid: GridSpec, d1: float, d2: float) -> "LinearSymbol":
        lam = grid.laplacian_symbol
        return cls.from_blocks(grid, d1 * lam, 0.0, 0.0, d2 * lam, name="diagonal")

    def matrix(self, index: tuple[int, int]) -> np.ndarray:
        """Dense 2x2 matrix of one mode."""
        return np.array([[self.g11[index], self.g12[index]], [0.0, self.g22[index]]])


def _check_tau(tau: float) -> None:
    if not tau >= 0:
        raise InvalidArgumentError(f"tau must be nonnegative, got {tau}")


def _apply_upper(m11: np.ndarray, m12: np.ndarray, m22: np.ndarray, c: np.ndarray) -> np.ndarray:
    out = np.empty_like(c)
    out[0] = m11 * c[0] + m12 * c[1]
    out[1] = m22 * c[1]
    return out


def resolvent_factors(sym: LinearSymbol, tau: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Entries of (I - tau*G_k)^{-1} per mode."""
    _check_tau(tau)
    a = 1.0 - tau * sym.g11
    b = 1.0 - tau * sym.g22
    return 1.0 / a, tau * sym.g12 / (a * b), 1.0 / b


def cayley_amplification(
    sym: LinearSymbol, tau: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Entries of (I + tau*G_k)(I - tau*G_k)^{-1} per mode."""
    _check_tau(tau)
    a = 1.0 - tau * sym.g11
    b = 1.0 - tau * sym.g22
    return (1.0 + tau * sym.g11) / a, 2.0 * tau * sym.g12 / (a * b), (1.0 + tau * sym.g22) / b


def apply_linear(sym: LinearSymbol, u: State) -> State:
    """Au, computed as inverse(G_k * u_hat_k). Exact for band-limited u."""
    check_same_grid(sym.grid, u.grid)
    coeffs = _apply_upper(sym.g11, sym.g12, sym.g22, u.coefficients())
    return State.from_coefficients(u.grid, coeffs)


def linear_resolvent(sym: LinearSymbol, tau: float, w: State) -> State:
    """Solve (I - tau*A)v = w."""
    check_same_grid(sym.grid, w.grid)
    if tau == 0:
        return w.copy()
    coeffs = _apply_upper(*resolvent_factors(sym, tau), w.coefficients())
    return State.from_coefficients(w.grid, coeffs)


def linear_cayley(sym: LinearSymbol, tau: float, w: State) -> State:
    """(I + tau*A)(I - tau*A)^{-1} w, i.e. w + 2*tau*A(I - tau*A)^{-1} w, per mode.

    A is never applied to unresolved data.
    """
    check_same_grid(sym.grid, w.grid)
    if tau == 0:
        return w.copy()
    coeffs = _apply_upper(*cayley_amplification(sym, tau), w.coefficients())
    return State.from_coefficients(w.grid, coeffs)
