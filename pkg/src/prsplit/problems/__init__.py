"""Concrete split problems: Caginalp solidification and Gray-Scott."""
from typing import Optional, Union

from ..models import CaginalpParams, GrayScottParams, ModelName
from ..spectral import GridSpec
from .base import SplitProblem, dissipativity_gap, lipschitz_bound_nonlinear_cayley, stability_bound
from .caginalp import (
    CaginalpProblem,
    caginalp_apply_F,
    caginalp_extract_theta,
    caginalp_initial,
    caginalp_nonlinear_resolvent,
)
from .grayscott import (
    GrayScottProblem,
    grayscott_apply_F,
    grayscott_initial,
    grayscott_nonlinear_resolvent,
)


def build_problem(
    model: Union[ModelName, str],
    grid: GridSpec,
    params: Optional[Union[CaginalpParams, GrayScottParams]] = None,
) -> SplitProblem:
    """Instantiate a problem by model name."""
    model = ModelName(model)
    if model == ModelName.CAGINALP:
        if params is not None and not isinstance(params, CaginalpParams):
            raise TypeError("caginalp needs CaginalpParams")
        return CaginalpProblem(grid, params)
    if params is not None and not isinstance(params, GrayScottParams):
        raise TypeError("gray-scott needs GrayScottParams")
    return GrayScottProblem(grid, params)


__all__ = [
    "SplitProblem",
    "dissipativity_gap",
    "lipschitz_bound_nonlinear_cayley",
    "stability_bound",
    "build_problem",
    "CaginalpProblem",
    "caginalp_apply_F",
    "caginalp_extract_theta",
    "caginalp_initial",
    "caginalp_nonlinear_resolvent",
    "GrayScottProblem",
    "grayscott_apply_F",
    "grayscott_initial",
    "grayscott_nonlinear_resolvent",
]
