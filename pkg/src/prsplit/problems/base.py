"""The SplitProblem interface: a pair (A, F) on a periodic grid."""

from abc import ABC, abstractmethod
from math import exp
from typing import Any

from ..norms import AnyNorm, inner
from ..spectral import GridSpec, LinearSymbol, State


class SplitProblem(ABC):
    """Semilinear problem u' = (A + F)u with linear A and pointwise nonlinear F.

    Subclasses provide the symbol of A, F itself, its resolvent
    (I - tau*F)^{-1}, initial data and the inner product in which A and F
    are dissipative with constants m_a and m_f.
    """

    name: str = "problem"

    def __init__(self, grid: GridSpec, symbol: LinearSymbol, m_f: float, m_a: float = 0.0):
        self.grid = grid
        self.symbol = symbol
        self.m_f = m_f
        self.m_a = m_a

    @property
    @abstractmethod
    def norm_kind(self) -> AnyNorm:
        """Inner-product geometry of the model."""

    @abstractmethod
    def apply_F(self, u: State) -> State:
        """Pointwise nonlinearity."""

    @abstractmethod
    def nonlinear_resolvent(self, tau: float, w: State) -> State:
        """Solve (I - tau*F)v = w pointwise; tau = 0 returns a copy of w."""

    @abstractmethod
    def initial_state(self) -> State:
        """Initial data sampled on the grid."""

    def parameters(self) -> dict[str, Any]:
        return {}

    def describe(self) -> dict[str, Any]:
        """Metadata for logs and reports."""
        return {
            "model": self.name,
            "n": self.grid.n,
            "parameters": self.parameters(),
            "m_a": self.m_a,
            "m_f": self.m_f,
            "norm": self.norm_kind.tag,
        }


def dissipativity_gap(problem: SplitProblem, u: State, v: State) -> float:
    """(Fu - Fv, u - v) - M[F] * |u - v|^2 in the model's inner product; <= 0 when dissipative."""
    kind = problem.norm_kind
    diff = u - v
    return inner(kind, problem.apply_F(u) - problem.apply_F(v), diff) - problem.m_f * inner(
        kind, diff, diff
    )


def lipschitz_bound_nonlinear_cayley(m_f: float, h: float) -> float:
    """Lipschitz bound (1 + h*M/2) / (1 - h*M/2) for (I + f)(I - f)^{-1}, f = h/2 F."""
    x = 0.5 * h * m_f
    return (1.0 + x) / (1.0 - x)


def stability_bound(problem: SplitProblem, h: float, j: int) -> float:
    """Bound exp(3/2 * j * h * (M[A] + M[F])) on the Lipschitz constant of R^j."""
    return exp(1.5 * j * h * (problem.m_a + problem.m_f))
