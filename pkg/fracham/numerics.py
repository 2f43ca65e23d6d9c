"""
Extended-precision contexts for spatial samples.

Every application of a finite-difference stencil multiplies round-off by
roughly 1/h**k for a k-th derivative, and the deformation recurrence composes
those stencils once per term. Samples are therefore carried in a private
mpmath context and converted to float only when a value leaves the engine.
The precision of a run is the configured floor raised to cover the expected
round-off growth.
"""

import math
from functools import lru_cache

import mpmath

from .conf import ham_setting

DEFAULT_FIELD_PRECISION = 80

# Digits kept after the predicted round-off growth has been paid for.
SAFETY_DIGITS = 24


@lru_cache(maxsize=None)
def precision_context(dps: int) -> mpmath.MPContext:
    # Contexts are never mutated after creation, so sharing them is safe.
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def working_context() -> mpmath.MPContext:
    """Context at the configured floor precision"""
    return precision_context(int(ham_setting('FIELD_PRECISION', DEFAULT_FIELD_PRECISION)))


def stencil_growth_digits(spacing: float, derivative_order: int, applications: int) -> int:
    """
    Decimal digits of round-off growth after composing stencils.

    A five-point stencil of order d amplifies its highest grid frequency by
    about 5.33 / h**d, so each application costs d*log10(1/h) + 0.73 digits.
    """
    if applications <= 0 or derivative_order <= 0:
        return 0
    per_step = derivative_order * max(math.log10(1.0 / spacing), 0.0) + math.log10(16.0 / 3.0)
    return int(math.ceil(per_step * applications))


def sample_context(spacing: float, derivative_order: int, applications: int) -> mpmath.MPContext:
    """Context precise enough for ``applications`` compositions of the stencil"""
    floor = int(ham_setting('FIELD_PRECISION', DEFAULT_FIELD_PRECISION))
    needed = SAFETY_DIGITS + stencil_growth_digits(spacing, derivative_order, applications)
    # Round up so runs on similar grids share a cached context.
    dps = max(floor, 10 * math.ceil(needed / 10))
    return precision_context(dps)


def guard_digits(log10_peak: float) -> int:
    """Decimal digits lost when summing terms whose largest is 10**log10_peak"""
    if log10_peak <= 0:
        return 0
    return 10 * int(math.ceil(log10_peak / 10))
