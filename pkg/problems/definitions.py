"""
The three benchmark problems: initial condition, residual builder and
reference solution of each.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from django.db import models

from fracham.exceptions import ConfigurationError

from .references import diffusion_reference, gasdyn_reference, kdv_reference
from .residuals import diffusion_g, gasdyn_g, kdv_g

logger = logging.getLogger(__name__)


class ProblemName(models.TextChoices):
    DIFFUSION = 'diffusion', 'Linear time-fractional diffusion'
    GASDYN = 'gasdyn', 'Nonlinear time-fractional gas dynamics'
    KDV = 'kdv', 'Nonlinear time-fractional KdV'


class ReferenceKind(models.TextChoices):
    EXACT = 'exact', 'Exact solution'
    SECOND_ORDER = 'second_order', 'Second-order approximation at hbar = -1'


@dataclass(frozen=True)
class ProblemDef:
    """A benchmark problem as the HAM engine consumes it"""

    name: str
    equation: str
    initial_condition: Callable
    residual_g: Callable
    reference: Optional[Callable]
    reference_kind: str
    # Highest x-derivative order composed per deformation step.
    derivative_order: int
    x_range: Tuple[float, float]
    probe_x: float

    @property
    def description(self) -> str:
        return ProblemName(self.name).label


def _cos_pi_x(x, lib):
    return lib.cos(lib.pi * x)


def _exp_minus_x(x, lib):
    return lib.exp(-x)


def _sinh_half_squared(x, lib):
    return lib.sinh(x / 2) ** 2


DIFFUSION = ProblemDef(
    name=ProblemName.DIFFUSION,
    equation='D^alpha u = u_xx + u,  u(x, a) = cos(pi x)',
    initial_condition=_cos_pi_x,
    residual_g=diffusion_g,
    reference=diffusion_reference,
    reference_kind=ReferenceKind.EXACT,
    derivative_order=2,
    x_range=(0.0, 1.0),
    probe_x=0.1,
)

GASDYN = ProblemDef(
    name=ProblemName.GASDYN,
    equation='D^alpha u + u u_x - u + u^2 = 0,  u(x, a) = exp(-x)',
    initial_condition=_exp_minus_x,
    residual_g=gasdyn_g,
    reference=gasdyn_reference,
    reference_kind=ReferenceKind.EXACT,
    derivative_order=1,
    x_range=(0.0, 2.0),
    probe_x=0.2,
)

KDV = ProblemDef(
    name=ProblemName.KDV,
    equation='D^alpha u - (u^2)_x + (u u_xx)_x = 0,  u(x, a) = sinh^2(x/2)',
    initial_condition=_sinh_half_squared,
    residual_g=kdv_g,
    reference=kdv_reference,
    reference_kind=ReferenceKind.SECOND_ORDER,
    derivative_order=3,
    x_range=(0.0, 2.0),
    probe_x=1.0,
)

PROBLEMS: Dict[str, ProblemDef] = {
    problem.name: problem for problem in (DIFFUSION, GASDYN, KDV)
}


def get_problem(name: str) -> ProblemDef:
    try:
        return PROBLEMS[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown problem '{name}'; expected one of {', '.join(PROBLEMS)}"
        ) from None
