"""
Reference solutions of the benchmark problems.

Diffusion and gas dynamics have closed forms in terms of the Mittag-Leffler
function; for KdV the reference is the second-order approximation at
hbar = -1, which is the only closed expression available for it.
"""

import math
from dataclasses import dataclass
from typing import Optional

from fracham.exceptions import DomainError
from special.functions import MLParams, gamma, mittag_leffler, psi_delta
from special.psi import PsiFunction


@dataclass(frozen=True)
class ReferenceFrame:
    """alpha, psi and a of a reference evaluation; alpha = 1 is allowed here"""

    alpha: float
    psi: PsiFunction
    a: float
    ml_max_terms: Optional[int] = None


def _kernel(frame, t: float) -> float:
    if not 0 < frame.alpha <= 1:
        raise DomainError(f'reference solutions need 0 < alpha <= 1, got {frame.alpha}')
    return psi_delta(frame.psi, frame.a, t)


def _ml(frame, z: float) -> float:
    if frame.alpha == 1:
        return math.exp(z)
    params = MLParams.from_settings(frame.alpha, getattr(frame, 'ml_max_terms', None))
    return mittag_leffler(frame.alpha, z, params)


def diffusion_reference(x: float, t: float, frame) -> float:
    """cos(pi x) E_alpha[(1 - pi^2) (psi(t) - psi(a))^alpha]"""
    delta = _kernel(frame, t)
    return math.cos(math.pi * x) * _ml(frame, (1.0 - math.pi ** 2) * delta ** frame.alpha)


def gasdyn_reference(x: float, t: float, frame) -> float:
    """exp(-x) E_alpha[(psi(t) - psi(a))^alpha]; exp(t - x) when alpha = 1 and psi(t) = t"""
    delta = _kernel(frame, t)
    return math.exp(-x) * _ml(frame, delta ** frame.alpha)


def kdv_reference(x: float, t: float, frame) -> float:
    """Second-order approximation at hbar = -1"""
    delta = _kernel(frame, t)
    alpha = frame.alpha
    return (
        math.sinh(x / 2.0) ** 2
        - math.sinh(x) * delta ** alpha / (4.0 * gamma(alpha + 1.0))
        + math.cosh(x) * delta ** (2.0 * alpha) / (8.0 * gamma(2.0 * alpha + 1.0))
    )
