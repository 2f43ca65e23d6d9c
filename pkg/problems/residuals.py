"""
Residual builders G_{m-1} = R_m - psi-Caputo derivative of u_{m-1}.

Quadratic nonlinearities become Cauchy convolutions over the term history,
sum_{i=0}^{m-1} u_i * v_{m-1-i}.
"""

from typing import Callable, List, Optional, Sequence

from fracham.exceptions import DomainError
from fracseries.series import (
    FractionalPowerSeries,
    series_product,
    series_spatial_derivative,
)
from ham.state import ResidualPart


def _history(terms: Sequence[FractionalPowerSeries], m: int) -> List[FractionalPowerSeries]:
    if m < 1:
        raise DomainError(f'residuals start at m = 1 (they need u_0), got m={m}')
    if m > len(terms):
        raise DomainError(f'R_{m} needs u_0 ... u_{m - 1}, only {len(terms)} terms given')
    return list(terms[:m])


def convolve_history(
    left: Sequence[FractionalPowerSeries],
    right: Sequence[FractionalPowerSeries],
    k_max: Optional[int] = None,
) -> FractionalPowerSeries:
    """sum_{i=0}^{n-1} left[i] * right[n-1-i] for histories of equal length n"""
    if len(left) != len(right) or not left:
        raise DomainError('convolution needs two non-empty histories of equal length')
    n = len(left)
    total = series_product(left[0], right[n - 1], k_max)
    for i in range(1, n):
        total = total + series_product(left[i], right[n - 1 - i], k_max)
    return total


def _mapped(history, fn: Callable) -> List[FractionalPowerSeries]:
    return [fn(u) for u in history]


def diffusion_g(terms, m: int, k_max: Optional[int] = None) -> ResidualPart:
    """G = -(d2u/dx2 + u) evaluated on u_{m-1}"""
    u = _history(terms, m)[-1]
    return ResidualPart(g=-(series_spatial_derivative(u, 2) + u))


def gasdyn_g(terms, m: int, k_max: Optional[int] = None) -> ResidualPart:
    """
    G = sum u_i du_j/dx - u_{m-1} + sum u_i u_j over i + j = m - 1.

    Both sums share the left factor, so they are built as one convolution of
    u_i with (du_j/dx + u_j).
    """
    history = _history(terms, m)
    slope_plus_value = _mapped(history, lambda u: series_spatial_derivative(u, 1) + u)
    return ResidualPart(g=convolve_history(history, slope_plus_value, k_max) - history[-1])


def kdv_g(terms, m: int, k_max: Optional[int] = None) -> ResidualPart:
    """
    G = -d/dx[sum u_i u_j] + d/dx[sum u_i d2u_j/dx2] over i + j = m - 1,
    built as d/dx of one convolution of u_i with (d2u_j/dx2 - u_j).
    """
    history = _history(terms, m)
    curvature_minus_value = _mapped(history, lambda u: series_spatial_derivative(u, 2) - u)
    inner = convolve_history(history, curvature_minus_value, k_max)
    return ResidualPart(g=series_spatial_derivative(inner, 1))
