"""
Scalar special functions: Gamma, the one-parameter Mittag-Leffler function
and the psi-kernel argument psi(t) - psi(a).
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import special as sp

from fracham.conf import ham_setting
from fracham.exceptions import DomainError, TruncationError
from fracham.numerics import guard_digits, precision_context

from .psi import PsiFunction

logger = logging.getLogger(__name__)

GAMMA_MAX_ARGUMENT = 171.0  # Gamma(171.7) overflows a double
ML_BASE_DIGITS = 30


def gamma(z: float) -> float:
    """
    Gamma function on the positive reals.

    Raises:
        DomainError: for non-positive, non-finite or overflowing arguments
    """
    z = float(z)
    if not np.isfinite(z) or z <= 0:
        raise DomainError(f'gamma is defined here for finite z > 0, got {z}')
    if z > GAMMA_MAX_ARGUMENT:
        raise DomainError(f'gamma({z}) overflows double precision')
    return float(sp.gamma(z))


@dataclass(frozen=True)
class MLParams:
    """Truncation control for the Mittag-Leffler series"""

    alpha: float
    max_terms: int = 200
    tail_tol: float = 1e-14

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and self.alpha > 0):
            raise DomainError(f'Mittag-Leffler order must be positive, got {self.alpha}')
        if self.max_terms < 1:
            raise DomainError('max_terms must be at least 1')
        if not self.tail_tol >= 0:
            raise DomainError('tail_tol must be non-negative')

    @classmethod
    def from_settings(cls, alpha: float, max_terms: Optional[int] = None) -> 'MLParams':
        return cls(
            alpha=alpha,
            max_terms=max_terms or int(ham_setting('ML_MAX_TERMS', 200)),
            tail_tol=float(ham_setting('ML_TAIL_TOL', 1e-14)),
        )


def _peak_log10_term(alpha: float, z: float, max_terms: int) -> float:
    # Largest log10 |z^m / Gamma(m*alpha + 1)| over the term budget.
    if z == 0:
        return 0.0
    m = np.arange(max_terms, dtype=float)
    logs = m * np.log(abs(z)) - sp.gammaln(m * alpha + 1.0)
    return float(np.max(logs) / np.log(10.0))


def mittag_leffler(alpha: float, z: float, params: Optional[MLParams] = None) -> float:
    """
    One-parameter Mittag-Leffler function E_alpha(z) = sum_m z^m / Gamma(m alpha + 1).

    The series is summed from m = 0 at a precision raised by the digits the
    largest term would cancel, and stops at the first term whose magnitude is
    at most ``tail_tol``.

    Raises:
        TruncationError: when ``max_terms`` terms do not reach ``tail_tol``
    """
    if params is None:
        params = MLParams.from_settings(alpha)
    elif params.alpha != alpha:
        raise DomainError(f'MLParams built for alpha={params.alpha}, called with {alpha}')
    z = float(z)
    if not np.isfinite(z):
        raise DomainError(f'Mittag-Leffler argument must be finite, got {z}')
    if z == 0:
        return 1.0

    peak = _peak_log10_term(alpha, z, params.max_terms)
    ctx = precision_context(ML_BASE_DIGITS + guard_digits(peak))
    z_mp = ctx.mpf(z)
    alpha_mp = ctx.mpf(alpha)
    total = ctx.mpf(0)
    power = ctx.mpf(1)
    term = ctx.mpf(1)
    for m in range(params.max_terms):
        term = power / ctx.gamma(m * alpha_mp + 1)
        total += term
        if m > 0 and abs(term) <= params.tail_tol:
            return float(total)
        power *= z_mp
    logger.debug(
        'Mittag-Leffler series for alpha=%s, z=%s stalled after %d terms',
        alpha, z, params.max_terms,
    )
    raise TruncationError(
        f'E_{alpha}({z}) did not converge within {params.max_terms} terms '
        f'(last term {float(abs(term)):.3e})',
        last_term=float(abs(term)),
    )


def psi_delta(psi: PsiFunction, a: float, t: float) -> float:
    """
    Kernel argument psi(t) - psi(a) of the psi-fractional integral.

    Raises:
        DomainError: when t < a or a lies below the domain of psi
    """
    if not psi.admits(a):
        raise DomainError(f'lower terminal a={a} outside the domain of psi={psi.label}')
    if not np.isfinite(t) or t < a:
        raise DomainError(f't={t} precedes the lower terminal a={a}')
    if t == a:
        return 0.0
    return float(psi(t) - psi(a))
