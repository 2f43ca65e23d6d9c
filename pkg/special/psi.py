"""
Time warps psi for the psi-fractional integral and psi-Caputo derivative.

Only the identity and the logarithm are built in; any other warp is supplied
by the caller through ``custom_psi``.
"""

import logging
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence

import numpy as np
from django.db import models

from fracham.exceptions import DomainError

logger = logging.getLogger(__name__)


class PsiKind(models.TextChoices):
    """Families of time warps"""
    IDENTITY = 'identity', 'Identity'
    LOGARITHM = 'log', 'Logarithm'
    CUSTOM = 'custom', 'Custom'


@dataclass(frozen=True)
class PsiFunction:
    """A strictly increasing warp t -> psi(t) with its derivative"""

    kind: str
    eval_fn: Callable[[float], float] = field(repr=False)
    deriv_fn: Callable[[float], float] = field(repr=False)
    domain_min: float
    name: str = ''

    def __call__(self, t):
        return self.eval_fn(t)

    def derivative(self, t):
        return self.deriv_fn(t)

    @property
    def label(self) -> str:
        return self.name or self.kind

    def admits(self, t: float) -> bool:
        return np.isfinite(t) and t >= self.domain_min

    def check_monotone(self, samples: Sequence[float]) -> None:
        """
        Verify psi' > 0 and psi strictly increasing on sorted samples.

        Raises:
            DomainError: when a sample lies outside the domain or the warp
                fails to increase there
        """
        ts = np.sort(np.asarray(samples, dtype=float))
        if ts.size == 0:
            return
        if ts[0] < self.domain_min:
            raise DomainError(f'sample {ts[0]} below domain of psi={self.label}')
        values = np.array([self.eval_fn(t) for t in ts], dtype=float)
        slopes = np.array([self.deriv_fn(t) for t in ts], dtype=float)
        if not np.all(slopes > 0):
            raise DomainError(f'psi={self.label} has non-positive derivative on the samples')
        distinct = np.diff(ts) > 0
        if not np.all(np.diff(values)[distinct] > 0):
            raise DomainError(f'psi={self.label} is not strictly increasing on the samples')


def _identity(t):
    return t


def _unit_slope(t):
    return 1.0 if np.isscalar(t) else np.ones_like(t, dtype=float)


def _reciprocal(t):
    return 1.0 / t


IDENTITY = PsiFunction(
    kind=PsiKind.IDENTITY,
    eval_fn=_identity,
    deriv_fn=_unit_slope,
    domain_min=0.0,
    name='identity',
)

LOGARITHM = PsiFunction(
    kind=PsiKind.LOGARITHM,
    eval_fn=np.log,
    deriv_fn=_reciprocal,
    domain_min=sys.float_info.min,
    name='log',
)

PSI_REGISTRY: Dict[str, PsiFunction] = {
    PsiKind.IDENTITY.value: IDENTITY,
    PsiKind.LOGARITHM.value: LOGARITHM,
}


def custom_psi(
    eval_fn: Callable[[float], float],
    deriv_fn: Callable[[float], float],
    domain_min: float,
    name: str = 'custom',
    samples: Optional[Sequence[float]] = None,
) -> PsiFunction:
    """
    Build a caller-supplied warp.

    Args:
        eval_fn: t -> psi(t)
        deriv_fn: t -> psi'(t)
        domain_min: smallest admissible t
        name: label used in logs and CSV headers
        samples: optional points on which monotonicity is verified

    Returns:
        PsiFunction: the validated warp
    """
    if not np.isfinite(domain_min):
        raise DomainError('domain_min of a custom psi must be finite')
    psi = PsiFunction(
        kind=PsiKind.CUSTOM,
        eval_fn=eval_fn,
        deriv_fn=deriv_fn,
        domain_min=float(domain_min),
        name=name,
    )
    if samples is not None:
        psi.check_monotone(samples)
    return psi


def get_psi(name: str) -> PsiFunction:
    """Look up a built-in warp by its CLI name"""
    try:
        return PSI_REGISTRY[name]
    except KeyError:
        raise DomainError(
            f"unknown psi '{name}'; expected one of {', '.join(sorted(PSI_REGISTRY))}"
        ) from None
