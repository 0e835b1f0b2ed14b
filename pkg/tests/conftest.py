"""Shared fixtures for prsplit tests."""

from typing import Any, Callable

import numpy as np
import pytest

from prsplit.models import CaginalpParams, L2Norm
from prsplit.problems import CaginalpProblem, SplitProblem
from prsplit.spectral import GridSpec, LinearSymbol, State, make_grid


class HeatProblem(SplitProblem):
    """u' = Laplacian(u) in both components, F = 0."""

    name = "heat"

    def __init__(self, grid: GridSpec):
        super().__init__(grid, LinearSymbol.diagonal(grid, 1.0, 1.0), m_f=0.0)

    @property
    def norm_kind(self) -> L2Norm:
        return L2Norm()

    def apply_F(self, u: State) -> State:
        return State.zeros(u.grid)

    def nonlinear_resolvent(self, tau: float, w: State) -> State:
        return w.copy()

    def initial_state(self) -> State:
        x1, _ = self.grid.coordinates()
        return State.from_components(self.grid, np.cos(x1), np.cos(x1))


class PointwiseCaginalp(CaginalpProblem):
    """Caginalp nonlinearity with A = 0."""

    name = "caginalp-pointwise"

    def __init__(self, grid: GridSpec, params: CaginalpParams | None = None):
        super().__init__(grid, params)
        self.symbol = LinearSymbol.zero(grid)

    def parameters(self) -> dict[str, Any]:
        return {"ell": self.params.ell, "symbol": "zero"}


def random_smooth_state(
    grid: GridSpec,
    rng: np.random.Generator,
    modes: int = 3,
    amplitude: float = 1.0,
    offset: tuple[float, float] = (0.0, 0.0),
) -> State:
    """Random trigonometric polynomial of degree <= modes in each component."""
    x1, x2 = grid.coordinates()
    components = []
    for c in range(2):
        field = np.full(grid.shape, offset[c])
        for k1 in range(modes + 1):
            for k2 in range(modes + 1):
                a, b = rng.uniform(-1.0, 1.0, size=2)
                phase = k1 * x1 + k2 * x2
                field += amplitude * (a * np.cos(phase) + b * np.sin(phase)) / (modes + 1) ** 2
        components.append(field)
    return State.from_components(grid, components[0], components[1])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


@pytest.fixture
def grid8() -> GridSpec:
    return make_grid(8)


@pytest.fixture
def grid16() -> GridSpec:
    return make_grid(16)


@pytest.fixture
def grid32() -> GridSpec:
    return make_grid(32)


@pytest.fixture
def smooth_state(rng: np.random.Generator) -> Callable[..., State]:
    """Factory: smooth_state(grid, **kwargs) draws a random smooth state."""

    def make(grid: GridSpec, **kwargs: Any) -> State:
        return random_smooth_state(grid, rng, **kwargs)

    return make


@pytest.fixture
def heat16(grid16: GridSpec) -> HeatProblem:
    return HeatProblem(grid16)


@pytest.fixture
def caginalp16(grid16: GridSpec) -> CaginalpProblem:
    return CaginalpProblem(grid16, CaginalpParams(ell=0.5))
