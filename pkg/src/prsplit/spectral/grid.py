"""Periodic square grids, real Fourier transforms and two-component states.

Mode layout: coefficient arrays have shape (n, n//2 + 1). Axis 0 holds the
full wavenumber range in FFT order (0, 1, ..., n/2-1, -n/2, ..., -1), axis 1
the nonnegative half (0, 1, ..., n/2) of a real-to-complex transform. Real
fields stay in real storage; every inverse transform is a real one, so the
Hermitian symmetry of the coefficients is restored on the way back.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import isfinite, pi
from typing import Optional, Union

import numpy as np
import scipy.fft

from ..errors import GridConfigurationError, GridMismatchError, NonFiniteStateError

Field = np.ndarray  # (n, n) float64


@dataclass(frozen=True, eq=False)
class GridSpec:
    """Equidistant periodic grid on (-L, L)^2 with n points per dimension."""

    n: int
    domain_half_width: float
    dx: float
    wavenumbers: np.ndarray  # axis-0 integer wavenumbers in FFT order
    half_wavenumbers: np.ndarray  # axis-1 integer wavenumbers 0..n/2
    laplacian_symbol: np.ndarray  # (n, n//2+1), lambda_k <= 0
    hermitian_weights: np.ndarray  # (n, n//2+1), 1 on self-conjugate columns, else 2

    @property
    def key(self) -> tuple[int, float]:
        return (self.n, self.domain_half_width)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n, self.n)

    @property
    def coeff_shape(self) -> tuple[int, int]:
        return (self.n, self.n // 2 + 1)

    def same_as(self, other: "GridSpec") -> bool:
        return self is other or self.key == other.key

    def coordinates(self) -> tuple[Field, Field]:
        """Grid points x_j = -L + j*dx, as (x1, x2) with x1 varying along axis 0."""
        x = -self.domain_half_width + self.dx * np.arange(self.n)
        x1, x2 = np.meshgrid(x, x, indexing="ij")
        return x1, x2

    def forward(self, data: np.ndarray) -> np.ndarray:
        """Real-to-complex transform over the last two axes."""
        return scipy.fft.rfft2(data, axes=(-2, -1))

    def inverse(self, coeffs: np.ndarray) -> np.ndarray:
        """Complex-to-real transform over the last two axes; inverse of forward()."""
        return scipy.fft.irfft2(coeffs, s=self.shape, axes=(-2, -1))

    def mode_index(self, k1: int, k2: int) -> tuple[int, int]:
        """Array index of wavenumber (k1, k2) in coefficient layout (k2 >= 0 after conjugation)."""
        if k2 < 0:
            k1, k2 = -k1, -k2
        half = self.n // 2
        if abs(k1) > half or k2 > half:
            raise GridConfigurationError(f"mode ({k1}, {k2}) not representable on n={self.n}")
        return (k1 % self.n, k2)


def _readonly(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


@lru_cache(maxsize=32)
def _build_grid(n: int, domain_half_width: float) -> GridSpec:
    k1 = np.rint(scipy.fft.fftfreq(n, d=1.0 / n)).astype(np.int64)
    k2 = np.rint(scipy.fft.rfftfreq(n, d=1.0 / n)).astype(np.int64)
    scale = (pi / domain_half_width) ** 2

    kk1, kk2 = np.meshgrid(k1, k2, indexing="ij")
    laplacian = -(kk1.astype(np.float64) ** 2 + kk2.astype(np.float64) ** 2) * scale
    laplacian[0, 0] = 0.0

    weights = np.full((n, n // 2 + 1), 2.0)
    weights[:, 0] = 1.0
    weights[:, n // 2] = 1.0

    return GridSpec(
        n=n,
        domain_half_width=domain_half_width,
        dx=2.0 * domain_half_width / n,
        wavenumbers=_readonly(k1),
        half_wavenumbers=_readonly(k2),
        laplacian_symbol=_readonly(laplacian),
        hermitian_weights=_readonly(weights),
    )


def make_grid(n: int, domain_half_width: float = pi) -> GridSpec:
    """Build (or fetch the cached) grid with n points per dimension on (-L, L)^2.

    Args:
        n: Points per dimension; a power of two, at least 4.
        domain_half_width: L > 0.

    Returns:
        Immutable GridSpec; equal inputs return the same object.

    Raises:
        GridConfigurationError: for invalid n or L.
    """
    if isinstance(n, bool) or int(n) != n or n < 4 or int(n) & (int(n) - 1):
        raise GridConfigurationError(f"n must be a power of two >= 4, got {n}")
    if not (isfinite(domain_half_width) and domain_half_width > 0):
        raise GridConfigurationError(
            f"domain_half_width must be positive and finite, got {domain_half_width}"
        )
    return _build_grid(int(n), float(domain_half_width))


def check_same_grid(a: GridSpec, b: GridSpec) -> None:
    """Raise GridMismatchError unless a and b describe the same grid."""
    if not a.same_as(b):
        raise GridMismatchError(f"grid mismatch: n={a.n}, L={a.domain_half_width} vs "
                                f"n={b.n}, L={b.domain_half_width}")


@dataclass(frozen=True, eq=False)
class State:
    """Two real fields on one grid, stored as a (2, n, n) array."""

    data: np.ndarray
    grid: GridSpec

    def __post_init__(self) -> None:
        if self.data.shape != (2,) + self.grid.shape:
            raise GridMismatchError(
                f"state data has shape {self.data.shape}, grid needs {(2,) + self.grid.shape}"
            )

    # --- construction ---

    @classmethod
    def zeros(cls, grid: GridSpec) -> "State":
        return cls(np.zeros((2,) + grid.shape), grid)

    @classmethod
    def constant(cls, grid: GridSpec, first: float, second: float) -> "State":
        data = np.empty((2,) + grid.shape)
        data[0] = first
        data[1] = second
        return cls(data, grid)

    @classmethod
    def from_components(cls, grid: GridSpec, first: Field, second: Field) -> "State":
        data = np.empty((2,) + grid.shape)
        data[0] = first
        data[1] = second
        return cls(data, grid)

    @classmethod
    def from_coefficients(cls, grid: GridSpec, coeffs: np.ndarray) -> "State":
        return cls(grid.inverse(coeffs), grid)

    # --- access ---

    def __getitem__(self, index: int) -> Field:
        return self.data[index]

    @property
    def first(self) -> Field:
        return self.data[0]

    @property
    def second(self) -> Field:
        return self.data[1]

    def coefficients(self) -> np.ndarray:
        return self.grid.forward(self.data)

    def mean(self, component: int) -> float:
        return float(np.mean(self.data[component]))

    def copy(self) -> "State":
        return State(self.data.copy(), self.grid)

    def view(self) -> "State":
        """Read-only view sharing memory with this state."""
        data = self.data.view()
        data.flags.writeable = False
        return State(data, self.grid)

    def restrict(self, coarse: GridSpec) -> "State":
        """Subsample onto a coarser grid whose nodes are a subset of this grid's nodes."""
        if coarse.domain_half_width != self.grid.domain_half_width or self.grid.n % coarse.n:
            raise GridMismatchError(f"cannot restrict n={self.grid.n} onto n={coarse.n}")
        factor = self.grid.n // coarse.n
        return State(np.ascontiguousarray(self.data[:, ::factor, ::factor]), coarse)

    # --- health ---

    def is_finite(self) -> bool:
        return bool(np.isfinite(self.data).all())

    def check_finite(self, step: Optional[int] = None) -> None:
        if not self.is_finite():
            raise NonFiniteStateError(step=step)

    # --- arithmetic (fresh states) ---

    def _other(self, other: "State") -> np.ndarray:
        check_same_grid(self.grid, other.grid)
        return other.data

    def __add__(self, other: "State") -> "State":
        return State(self.data + self._other(other), self.grid)

    def __sub__(self, other: "State") -> "State":
        return State(self.data - self._other(other), self.grid)

    def __mul__(self, scalar: Union[float, int]) -> "State":
        return State(self.data * scalar, self.grid)

    __rmul__ = __mul__

    def __neg__(self) -> "State":
        return State(-self.data, self.grid)
