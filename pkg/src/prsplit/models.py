"""Pydantic models for prsplit parameters, configs and reports."""

from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator

from .config import (
    DEFAULT_D1,
    DEFAULT_D2,
    DEFAULT_DOMAIN_HALF_WIDTH,
    DEFAULT_ELL,
    DEFAULT_L1,
    DEFAULT_L2,
    DEFAULT_OUTPUT_DIR,
)


class ModelName(str, Enum):
    """Problems shipped with prsplit."""

    CAGINALP = "caginalp"
    GRAY_SCOTT = "gray-scott"


class Scheme(str, Enum):
    """Splitting scheme."""

    PR = "pr"
    LIE = "lie"


# === Model Parameters ===

class CaginalpParams(BaseModel):
    """Caginalp solidification model in (psi, phi) variables."""

    model_config = ConfigDict(frozen=True)

    ell: float = Field(DEFAULT_ELL, gt=0)  # latent-heat coupling

    @computed_field  # type: ignore[prop-decorator]
    @property
    def m_f(self) -> float:
        """Dissipativity constant M[F] <= max{3/2 - l, l^2} in the weighted inner product."""
        return max(1.5 - self.ell, self.ell**2)


class GrayScottParams(BaseModel):
    """Gray-Scott reaction-diffusion parameters."""

    model_config = ConfigDict(frozen=True)

    d1: float = Field(DEFAULT_D1, gt=0)
    d2: float = Field(DEFAULT_D2, gt=0)
    l1: float = Field(DEFAULT_L1, gt=0)  # feed
    l2: float = Field(DEFAULT_L2, gt=0)  # kill

    @computed_field  # type: ignore[prop-decorator]
    @property
    def m_f(self) -> float:
        # No global constant exists for the untruncated nonlinearity; advisory only.
        return 0.0


# === Norm Kinds ===

class L2Norm(BaseModel):
    """Plain L2 over both components."""

    model_config = ConfigDict(frozen=True)

    tag: Literal["l2"] = "l2"


class WeightedCaginalpNorm(BaseModel):
    """(psi1, psi2) + l^2 (phi1, phi2)."""

    model_config = ConfigDict(frozen=True)

    tag: Literal["weighted"] = "weighted"
    ell: float = Field(gt=0)


class GraphGrayScottNorm(BaseModel):
    """Graph inner product (Au, Av) + (u, v) with A = diag(d1, d2) Laplacian."""

    model_config = ConfigDict(frozen=True)

    tag: Literal["graph"] = "graph"
    d1: float = Field(gt=0)
    d2: float = Field(gt=0)


NormKind = Annotated[
    Union[L2Norm, WeightedCaginalpNorm, GraphGrayScottNorm], Field(discriminator="tag")
]


# === Stepping ===

class StepperConfig(BaseModel):
    """Fixed-step integration settings."""

    model_config = ConfigDict(frozen=True)

    scheme: Scheme = Scheme.PR
    h: float = Field(gt=0)
    n_steps: int = Field(ge=0)
    enforce_stability: bool = False

    @property
    def stability_limit(self) -> float:
        """Bound on h*max{M[A], M[F]}: 1 for Peaceman-Rachford, 1/2 for Lie."""
        return 1.0 if self.scheme == Scheme.PR else 0.5


def _parse_number(value: Any) -> float:
    if isinstance(value, str):
        return float(Fraction(value.strip()))
    return float(value)


def _parse_number_list(value: Any) -> Any:
    if isinstance(value, str):
        return [_parse_number(item) for item in value.split(",") if item.strip()]
    if isinstance(value, (list, tuple)):
        return [_parse_number(item) for item in value]
    return value


class RunSpec(BaseModel):
    """Everything a `run` or `converge` invocation needs."""

    model: ModelName
    scheme: Scheme
    n: int
    t_final: float = Field(gt=0)
    n_steps: Optional[int] = Field(None, ge=0)
    norm: Optional[Literal["l2", "weighted", "graph"]] = None
    out: Path = Path(DEFAULT_OUTPUT_DIR)
    enforce_stability: bool = False
    long: bool = False
    h_list: Optional[list[float]] = None
    ref_steps: Optional[int] = Field(None, gt=0)
    snapshot_times: list[float] = Field(default_factory=list)
    ell: float = Field(DEFAULT_ELL, gt=0)
    d1: float = Field(DEFAULT_D1, gt=0)
    d2: float = Field(DEFAULT_D2, gt=0)
    l1: float = Field(DEFAULT_L1, gt=0)
    l2: float = Field(DEFAULT_L2, gt=0)
    domain_half_width: float = Field(DEFAULT_DOMAIN_HALF_WIDTH, gt=0)
    workers: int = Field(1, ge=1)
    ref_grid_factor: int = Field(1, ge=1)

    @field_validator("t_final", "ell", "d1", "d2", "l1", "l2", "domain_half_width", mode="before")
    @classmethod
    def _fractions(cls, value: Any) -> Any:
        return _parse_number(value) if isinstance(value, str) else value

    @field_validator("h_list", "snapshot_times", mode="before")
    @classmethod
    def _number_lists(cls, value: Any) -> Any:
        return _parse_number_list(value)

    @field_validator("n")
    @classmethod
    def _power_of_two(cls, value: int) -> int:
        if value < 4 or value & (value - 1):
            raise ValueError(f"n must be a power of two >= 4, got {value}")
        return value

    @field_validator("h_list")
    @classmethod
    def _positive_steps(cls, value: Optional[list[float]]) -> Optional[list[float]]:
        if value is not None:
            if not value:
                raise ValueError("h_list must not be empty")
            if any(h <= 0 for h in value):
                raise ValueError("step sizes must be positive")
        return value

    @model_validator(mode="after")
    def _default_norm(self) -> "RunSpec":
        if self.norm is None:
            self.norm = "weighted" if self.model == ModelName.CAGINALP else "graph"
        if self.norm == "weighted" and self.model != ModelName.CAGINALP:
            raise ValueError("the weighted norm is defined for the caginalp model only")
        if self.norm == "graph" and self.model != ModelName.GRAY_SCOTT:
            raise ValueError("the graph norm is defined for the gray-scott model only")
        if any(t < 0 or t > self.t_final for t in self.snapshot_times):
            raise ValueError("snapshot times must lie in [0, t_final]")
        return self

    @property
    def h(self) -> float:
        """Step size t_final / n_steps."""
        if not self.n_steps:
            raise ValueError("n_steps is not set")
        return self.t_final / self.n_steps

    def problem_params(self) -> Union[CaginalpParams, GrayScottParams]:
        """Model parameters selected by this spec."""
        if self.model == ModelName.CAGINALP:
            return CaginalpParams(ell=self.ell)
        return GrayScottParams(d1=self.d1, d2=self.d2, l1=self.l1, l2=self.l2)

    def norm_kind(self) -> Union[L2Norm, WeightedCaginalpNorm, GraphGrayScottNorm]:
        """Norm used for error measurement."""
        if self.norm == "l2":
            return L2Norm()
        if self.norm == "weighted":
            return WeightedCaginalpNorm(ell=self.ell)
        return GraphGrayScottNorm(d1=self.d1, d2=self.d2)

    def stepper_config(self, n_steps: int) -> StepperConfig:
        """Stepper settings for n_steps uniform steps up to t_final."""
        h = self.t_final / n_steps if n_steps else self.t_final
        return StepperConfig(
            scheme=self.scheme, h=h, n_steps=n_steps, enforce_stability=self.enforce_stability
        )


# === Reports ===

class ConvergenceRow(BaseModel):
    """One run of a convergence study."""

    h: float
    n_steps: int
    error: float
    observed_order: Optional[float] = None
    wall_time: float = 0.0


class ConvergenceReport(BaseModel):
    """Errors against a reference solution for a sequence of step sizes."""

    model: ModelName
    scheme: Scheme
    norm: str
    n: int
    t_final: float
    reference_n_steps: int
    reference_grid_n: int
    rows: list[ConvergenceRow] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_rows(self) -> "ConvergenceReport":
        hs = [row.h for row in self.rows]
        if any(a <= b for a, b in zip(hs, hs[1:])):
            raise ValueError("step sizes must be strictly decreasing")
        if any(row.error <= 0 for row in self.rows):
            raise ValueError("errors must be positive")
        return self

    @property
    def orders(self) -> list[float]:
        """Pairwise observed orders (one fewer than rows)."""
        return [row.observed_order for row in self.rows[1:] if row.observed_order is not None]

    @property
    def expected_order(self) -> int:
        """Order asserted for the scheme on smooth solutions."""
        return 2 if self.scheme == Scheme.PR else 1

    def describe(self) -> str:
        """One-line legend text."""
        return f"{self.model.value} / {self.scheme.value.upper()} / {self.norm} norm"
