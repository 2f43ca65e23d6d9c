"""
Fractional power series sum_k c_k(x) (psi(t) - psi(a))^(k alpha).

The exponent lattice {0, alpha, 2 alpha, ...} is closed under the Cauchy
product and under the psi-fractional integral of order alpha, which shifts
every index up by one (the power rule). All HAM terms live in this algebra.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

import mpmath
import numpy as np

from fracham.exceptions import DomainError, IncompatibleSeriesError
from special.functions import psi_delta
from special.psi import PsiFunction

from .grid import GridSpec, SpatialField, field_derivative, interpolate_fields

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def lattice_gamma(ctx: mpmath.MPContext, alpha: float, k: int):
    """Gamma(k alpha + 1) in the sample context"""
    return ctx.gamma(k * ctx.mpf(alpha) + 1)


@dataclass(frozen=True, eq=False)
class FractionalPowerSeries:
    """Coefficient k multiplies (psi(t) - psi(a))^(k alpha)"""

    alpha: float
    psi: PsiFunction
    a: float
    coeffs: Tuple[SpatialField, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError('a series needs at least the k=0 coefficient')
        if not 0 < self.alpha <= 1:
            raise DomainError(f'lattice order alpha must lie in (0, 1], got {self.alpha}')
        grid = self.coeffs[0].grid
        if any(c.grid != grid for c in self.coeffs[1:]):
            raise IncompatibleSeriesError('coefficient fields must share one grid')
        object.__setattr__(self, 'coeffs', tuple(self.coeffs))

    @property
    def grid(self) -> GridSpec:
        return self.coeffs[0].grid

    @property
    def ctx(self) -> mpmath.MPContext:
        return self.coeffs[0].ctx

    def __len__(self):
        return len(self.coeffs)

    @property
    def max_index(self) -> int:
        """Highest lattice index with a non-zero coefficient, -1 for the zero series"""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[k].is_zero:
                return k
        return -1

    @property
    def is_zero(self) -> bool:
        return self.max_index < 0

    def coefficient(self, k: int) -> SpatialField:
        if k < len(self.coeffs):
            return self.coeffs[k]
        return SpatialField.zeros(self.grid, self.ctx)

    def _with(self, coeffs) -> 'FractionalPowerSeries':
        return FractionalPowerSeries(self.alpha, self.psi, self.a, tuple(coeffs))

    def __add__(self, other):
        return series_add(self, other)

    def __neg__(self):
        return series_scale(self, -1)

    def __sub__(self, other):
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, FractionalPowerSeries):
            return series_product(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__


def check_compatible(p: FractionalPowerSeries, q: FractionalPowerSeries) -> None:
    """
    Raises:
        IncompatibleSeriesError: when alpha, psi, a or the grid differ
    """
    if p.alpha != q.alpha:
        raise IncompatibleSeriesError(f'alpha differs: {p.alpha} vs {q.alpha}')
    if p.psi != q.psi:
        raise IncompatibleSeriesError(f'psi differs: {p.psi.label} vs {q.psi.label}')
    if p.a != q.a:
        raise IncompatibleSeriesError(f'lower terminal differs: {p.a} vs {q.a}')
    if p.grid != q.grid:
        raise IncompatibleSeriesError(f'grid differs: {p.grid} vs {q.grid}')


def zero_series(
    alpha: float,
    psi: PsiFunction,
    a: float,
    grid: GridSpec,
    ctx: Optional[mpmath.MPContext] = None,
) -> FractionalPowerSeries:
    return FractionalPowerSeries(alpha, psi, a, (SpatialField.zeros(grid, ctx),))


def constant_series(
    c0: SpatialField,
    alpha: float,
    psi: PsiFunction,
    a: float,
) -> FractionalPowerSeries:
    """Series whose only coefficient is k = 0 (constant in t)"""
    return FractionalPowerSeries(alpha, psi, a, (c0,))


def leading_series(p: FractionalPowerSeries) -> FractionalPowerSeries:
    """The k = 0 part of p as a series, i.e. the value at t = a"""
    return p._with((p.coeffs[0],))


def series_truncate(p: FractionalPowerSeries, k_max: Optional[int]) -> FractionalPowerSeries:
    """Drop lattice indices above k_max"""
    if k_max is None or len(p.coeffs) <= k_max + 1:
        return p
    if k_max < 0:
        raise DomainError(f'k_max must be non-negative, got {k_max}')
    return p._with(p.coeffs[:k_max + 1])


def series_add(p: FractionalPowerSeries, q: FractionalPowerSeries) -> FractionalPowerSeries:
    check_compatible(p, q)
    n = max(len(p), len(q))
    return p._with(p.coefficient(k) + q.coefficient(k) for k in range(n))


def series_scale(p: FractionalPowerSeries, s) -> FractionalPowerSeries:
    if not np.isfinite(float(s)):
        raise DomainError(f'scale factor must be finite, got {s}')
    return p._with(c.scale(s) for c in p.coeffs)


def series_product(
    p: FractionalPowerSeries,
    q: FractionalPowerSeries,
    k_max: Optional[int] = None,
) -> FractionalPowerSeries:
    """
    Cauchy product on the exponent lattice, out_k = sum_{i+j=k} p_i q_j.

    Args:
        p, q: compatible series
        k_max: highest lattice index kept, all of them when None
    """
    check_compatible(p, q)
    top = len(p) + len(q) - 2
    if k_max is not None:
        top = min(top, k_max)
    grid, ctx = p.grid, p.ctx
    out = []
    for k in range(top + 1):
        acc = SpatialField.zeros(grid, ctx)
        for i in range(max(0, k - len(q) + 1), min(k, len(p) - 1) + 1):
            acc = acc + p.coeffs[i] * q.coeffs[k - i]
        out.append(acc)
    return p._with(out)


def series_spatial_derivative(p: FractionalPowerSeries, order: int) -> FractionalPowerSeries:
    """x-derivative applied to every coefficient"""
    return p._with(field_derivative(c, order) for c in p.coeffs)


def frac_integral(p: FractionalPowerSeries) -> FractionalPowerSeries:
    """
    Left psi-fractional integral of order alpha by the power rule.

    c_k (psi_t - psi_a)^(k alpha) maps to
    c_k Gamma(k alpha + 1) / Gamma(k alpha + alpha + 1) (psi_t - psi_a)^((k+1) alpha).
    """
    ctx = p.ctx
    out = [SpatialField.zeros(p.grid, ctx)]
    for k, c in enumerate(p.coeffs):
        out.append(c.scale(lattice_gamma(ctx, p.alpha, k) / lattice_gamma(ctx, p.alpha, k + 1)))
    return p._with(out)


def caputo_derivative(p: FractionalPowerSeries) -> FractionalPowerSeries:
    """
    Formal psi-Caputo derivative of order alpha on the lattice.

    The k = 0 term is constant in t and is annihilated; index k >= 1 maps to
    k - 1 with the factor Gamma(k alpha + 1) / Gamma(k alpha - alpha + 1).
    """
    ctx = p.ctx
    if len(p) == 1:
        return p._with((SpatialField.zeros(p.grid, ctx),))
    out = []
    for k in range(1, len(p)):
        factor = lattice_gamma(ctx, p.alpha, k) / lattice_gamma(ctx, p.alpha, k - 1)
        out.append(p.coeffs[k].scale(factor))
    return p._with(out)


def series_profile(p: FractionalPowerSeries, x: float) -> np.ndarray:
    """Float values c_k(x) of every coefficient"""
    return interpolate_fields(p.coeffs, x)


def evaluate_profile(profile: np.ndarray, alpha: float, delta) -> np.ndarray:
    """sum_k profile[k] * delta^(k alpha) for scalar or array delta"""
    delta = np.asarray(delta, dtype=float)
    exponents = alpha * np.arange(len(profile))
    with np.errstate(divide='ignore'):
        powers = np.power.outer(delta, exponents)
    return powers @ profile


def series_values(p: FractionalPowerSeries, x: float, ts: Sequence[float]) -> np.ndarray:
    """Series values at one x for many t"""
    deltas = np.array([psi_delta(p.psi, p.a, t) for t in ts], dtype=float)
    return evaluate_profile(series_profile(p, x), p.alpha, deltas)


def series_eval(p: FractionalPowerSeries, x: float, t: float) -> float:
    """
    u(x, t) = sum_k c_k(x) (psi(t) - psi(a))^(k alpha).

    Raises:
        DomainError: when x is outside the grid or t < a
    """
    delta = psi_delta(p.psi, p.a, t)
    return float(evaluate_profile(series_profile(p, x), p.alpha, delta))
